#pragma once

namespace aqcsim {

/// Desk-scale resource guards. Every constructor that allocates 2^N storage
/// checks against these.
struct ResourceLimits {
  int max_sites = 24;        // state vectors: 2^24 complex doubles = 256 MiB
  int dense_max_sites = 14;  // dense matrices: 2^14 x 2^14 doubles = 2 GiB
};

}  // namespace aqcsim
