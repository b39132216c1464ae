#pragma once

#include <stdexcept>
#include <string>

namespace pyreg {

/// Failure categories surfaced by the registration pipeline. Each maps to a
/// distinct code so callers (and the CLI) can act on the class of failure
/// without parsing messages.
enum class Errc {
  io,                    // file missing / unreadable / truncated
  parse,                 // malformed text or binary input
  bad_config,            // invalid parameters or thresholds
  undefined_trim,        // ratio TRIM with zero target distance
  empty_clique,          // clique rounding produced no vertices
  insufficient_pairs,    // too few pairs for the requested dof
  degenerate,            // collinear/coincident point configuration
  estimation_failed,     // GNC collapsed to all-zero weights
  no_correspondences,    // landmark classes do not overlap
  all_candidates_failed  // every pyramid layer failed to produce a pose
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace pyreg
