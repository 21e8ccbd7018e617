#ifndef MARKPI_NAMES_HPP
#define MARKPI_NAMES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>

namespace markpi {

/// Channel names and stochastic (delay) names are disjoint sorts; the kind is
/// fixed when the name is created.
enum class NameKind : uint8_t { Channel, Stochastic };

struct Name {
  NameKind kind = NameKind::Channel;
  std::string id;

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;
};

inline Name chan(std::string id) { return Name{NameKind::Channel, std::move(id)}; }
inline Name stoch(std::string id) { return Name{NameKind::Stochastic, std::move(id)}; }

/// A strictly positive rate. `text` keeps the decimal literal as written so
/// printing round-trips; it is empty for rates built programmatically.
/// Semantic equality is on `value` (identical literals parse to identical
/// doubles).
struct Rate {
  double value = 0.0;
  std::string text;

  friend bool operator==(const Rate& a, const Rate& b) { return a.value == b.value; }
  friend auto operator<=>(const Rate& a, const Rate& b) { return a.value <=> b.value; }
};

Rate make_rate(double value);
Rate make_rate(double value, std::string text);

/// Renders a rate for output: the original literal if present, otherwise the
/// shortest decimal that round-trips the double.
std::string rate_to_string(const Rate& r);

/// Shortest round-trip rendering of a double (used for canonical keys and all
/// deterministic numeric output).
std::string double_to_string(double v);

/// Fresh-name source for one analysis session. Freshness is checked against
/// every identifier reserved so far plus everything generated; the counter is
/// monotone, so identical inputs yield identical fresh names.
class NameGen {
 public:
  NameGen() = default;

  void reserve(const std::string& id) { used_.insert(id); }
  void reserve(const Name& n) { used_.insert(n.id); }
  bool is_used(const std::string& id) const { return used_.count(id) != 0; }

  /// Returns a name with the given kind whose identifier starts with `stem`
  /// and has never been reserved or generated in this session.
  Name fresh(NameKind kind, const std::string& stem);

 private:
  std::unordered_set<std::string> used_;
  uint64_t counter_ = 0;
};

}  // namespace markpi

#endif
