#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pcross/globalization.hpp"
#include "pcross/partial_action.hpp"

namespace pcross {

struct GlobalSpec {
  AlgebraData algebra;
  Tensor3 action;
  Tensor3 twist;
};

/// Parsed definition file. Matrices are stored in the library convention
/// (column i = image of basis vector i); in the file, row i is the image of
/// basis vector i.
struct SpecFile {
  Field field;
  std::optional<HopfAlgebraData> hopf;
  std::optional<AlgebraData> algebra;
  std::optional<Tensor3> action;
  std::optional<Tensor3> cocycle;
  std::optional<GlobalSpec> global;
  std::optional<Vector> idempotent;
  std::optional<Matrix> theta;        // dim B x dim A
  std::optional<Matrix> gauge;        // dim A x dim H
  std::optional<Matrix> gamma;        // dim(A) dim(H) x dim H, A (x) H coordinates
  std::optional<Matrix> gamma_prime;
  std::optional<Vector> integral_t;
  std::optional<Vector> center_c;

  /// (H, A, action, cocycle); a missing cocycle defaults to w(h, l) = h . (l . 1_A).
  TwistedPartialAction partial() const;
  GlobalTwistedAction global_action() const;
  EnvelopingActionData enveloping() const;
};

/// Parses the JSON definition format. `field_override` replaces the file's
/// field descriptor (and is required when the file has none). Errors carry
/// line/column for syntax problems and a JSON path for shape problems.
SpecFile parse_spec(std::string_view text, std::optional<Field> field_override = std::nullopt);
/// Canonical JSON with every object fully expanded.
std::string serialize_spec(const SpecFile& spec);

/// Shorthand-free spec file for an enveloping action (H, A, action, cocycle,
/// global, theta, idempotent = theta(1_A)).
SpecFile spec_from_enveloping(const EnvelopingActionData& env);
SpecFile spec_from_partial(const TwistedPartialAction& tpa);

}  // namespace pcross
