#include "vmsim/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <fstream>

#include "vmsim/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot files are little-endian; this port needs byte swaps");

namespace vmsim {

namespace {

void put_f64(std::ofstream& out, double v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_u64(std::ofstream& out, std::uint64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_block(std::ofstream& out, const double* p, std::size_t n) {
  out.write(reinterpret_cast<const char*>(p),
            static_cast<std::streamsize>(n * sizeof(double)));
}

double get_f64(std::ifstream& in) {
  double v;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

std::uint64_t get_u64(std::ifstream& in) {
  std::uint64_t v;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

void get_block(std::ifstream& in, double* p, std::size_t n) {
  in.read(reinterpret_cast<char*>(p),
          static_cast<std::streamsize>(n * sizeof(double)));
}

}  // namespace

void write_snapshot(const std::string& path, const DistributionFunction& f,
                    const FieldState& fields) {
  const PhaseGrid& g = f.grid;
  if (fields.n_nodes() != g.nx_nodes())
    throw_config("snapshot: field and grid node counts disagree");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_config("cannot open snapshot file for writing: " + path);

  put_f64(out, g.x_min);
  put_f64(out, g.x_max);
  put_f64(out, g.v1_min);
  put_f64(out, g.v1_max);
  put_f64(out, g.v2_min);
  put_f64(out, g.v2_max);
  put_u64(out, static_cast<std::uint64_t>(g.n_x));
  put_u64(out, static_cast<std::uint64_t>(g.n_v1));
  put_u64(out, static_cast<std::uint64_t>(g.n_v2));
  put_f64(out, f.time);
  put_block(out, f.values.data.data(), f.values.data.size());
  put_block(out, fields.e1.data(), fields.e1.size());
  put_block(out, fields.e2.data(), fields.e2.size());
  put_block(out, fields.b.data(), fields.b.size());
  put_block(out, fields.a.data(), fields.a.size());
  if (!out) throw_config("failed writing snapshot file: " + path);
}

SnapshotData read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_config("cannot open snapshot file: " + path);

  double x_min = get_f64(in), x_max = get_f64(in);
  double v1_min = get_f64(in), v1_max = get_f64(in);
  double v2_min = get_f64(in), v2_max = get_f64(in);
  std::uint64_t n_x = get_u64(in), n_v1 = get_u64(in), n_v2 = get_u64(in);
  double time = get_f64(in);
  if (!in) throw_config("snapshot file truncated in header: " + path);
  const std::uint64_t limit = 1u << 24;
  if (n_x < 4 || n_v1 < 4 || n_v2 < 4 || n_x > limit || n_v1 > limit ||
      n_v2 > limit)
    throw_config("snapshot header carries implausible cell counts: " + path);

  SnapshotData snap;
  snap.grid = PhaseGrid::make(x_min, x_max, static_cast<int>(n_x), v1_min,
                              v1_max, static_cast<int>(n_v1), v2_min, v2_max,
                              static_cast<int>(n_v2));
  snap.time = time;
  snap.f = Array3(snap.grid.nx_nodes(), snap.grid.nv1_nodes(),
                  snap.grid.nv2_nodes());
  get_block(in, snap.f.data.data(), snap.f.data.size());
  const std::size_t nn = static_cast<std::size_t>(snap.grid.nx_nodes());
  snap.e1.resize(nn);
  snap.e2.resize(nn);
  snap.b.resize(nn);
  snap.a.resize(nn);
  get_block(in, snap.e1.data(), nn);
  get_block(in, snap.e2.data(), nn);
  get_block(in, snap.b.data(), nn);
  get_block(in, snap.a.data(), nn);
  if (!in) throw_config("snapshot file truncated: " + path);
  in.peek();
  if (!in.eof()) throw_config("snapshot file has trailing bytes: " + path);
  return snap;
}

}  // namespace vmsim
