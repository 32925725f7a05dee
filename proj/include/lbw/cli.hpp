#pragma once

namespace lbw::cli {

// Exit codes: 0 success, 1 domain error (machine-readable JSON on stderr),
// 2 usage error. The only environment variable honored is LBW_OUT_DIR, which
// rebases relative --out paths.
int dispatch(int argc, const char* const* argv);

}  // namespace lbw::cli
