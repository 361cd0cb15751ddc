#pragma once

#define VMSIM_VERSION "0.1.0"
