// Dung semantics over an attack graph and the consequence relations built
// on them.
//
// Complete extensions are enumerated as complete labellings: depth-first
// over the nodes the grounded labelling leaves open, propagating the
// labelling constraints after each choice.

#ifndef CASEWISE_SEMANTICS_HPP
#define CASEWISE_SEMANTICS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casewise/saf.hpp"

namespace casewise {

enum class Semantics { Grounded, Complete, Preferred };
enum class Mode { Forall, Intersect };

const char* to_string(Semantics s);
const char* to_string(Mode m);
std::optional<Semantics> parse_semantics(std::string_view s);
std::optional<Mode> parse_mode(std::string_view s);

// Plain framework: attackers[i] lists the attackers of node i.
struct Af {
  std::vector<std::vector<std::size_t>> attackers;
  std::vector<std::vector<std::size_t>> attacked;

  Af() = default;
  explicit Af(std::vector<std::vector<std::size_t>> attackers);
  static Af from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static Af from_saf(const Saf& saf);
  std::size_t size() const { return attackers.size(); }
};

using Extension = std::vector<std::size_t>;  // sorted node indices

struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(std::size_t cap)
      : std::runtime_error("complete-labelling enumeration exceeded " + std::to_string(cap) +
                           " explored labellings") {}
};

constexpr std::size_t kDefaultLabellingCap = 1000000;

Extension grounded(const Af& af);
// Sorted lexicographically; grounded first.
std::vector<Extension> complete(const Af& af, std::size_t cap = kDefaultLabellingCap);
std::vector<Extension> preferred(const Af& af, std::size_t cap = kDefaultLabellingCap);
std::vector<Extension> extensions(const Af& af, Semantics sem,
                                  std::size_t cap = kDefaultLabellingCap);

bool conflict_free(const Af& af, const Extension& e);
bool defends(const Af& af, const Extension& e, std::size_t x);
bool is_admissible(const Af& af, const Extension& e);
bool is_complete(const Af& af, const Extension& e);

// Formulas concluded by base nodes: in every extension (Forall), or by a base
// node in the intersection of all extensions (Intersect). Sorted.
std::vector<Formula> consequences(const Saf& saf, const std::vector<Extension>& exts, Mode mode);
std::vector<Formula> consequences(const Saf& saf, Semantics sem, Mode mode,
                                  std::size_t cap = kDefaultLabellingCap);

struct QueryResult {
  bool holds = false;
  // Per extension, the first base member concluding the formula (Forall);
  // the witnesses in the intersection (Intersect).
  std::vector<std::size_t> witnesses;
  std::size_t n_extensions = 0;
};

QueryResult entails_query(const Saf& saf, Semantics sem, Mode mode, Formula phi,
                          std::size_t cap = kDefaultLabellingCap);

}  // namespace casewise

#endif  // CASEWISE_SEMANTICS_HPP
