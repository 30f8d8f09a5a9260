#pragma once

#include <string>
#include <vector>

#include "credal/elementary.hpp"
#include "credal/rational.hpp"

namespace credal::testing {

inline Rational rat(const std::string& s) { return parse_rational(s); }
inline ExtendedRational ext(const std::string& s) { return parse_extended(s); }

inline Ambient line() { return Ambient::full_line(); }
inline Ambient open01() { return Ambient::open(ExtendedRational(0), ExtendedRational(1)); }
inline Ambient openc(const std::string& a, const std::string& b) { return Ambient::open(ext(a), ext(b)); }
inline Ambient closedc(const std::string& a, const std::string& b) { return Ambient::closed(rat(a), rat(b)); }

// Set from "lo hi lo hi ..." endpoint strings.
inline ElementarySet set_of(const Ambient& ambient, const std::vector<std::string>& endpoints) {
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i + 1 < endpoints.size(); i += 2)
    ivs.push_back(Interval{ext(endpoints[i]), ext(endpoints[i + 1])});
  return ElementarySet::from_normal_intervals(std::move(ivs), ambient);
}

// Sample points for membership oracles: midpoints between consecutive
// critical values, plus points hanging off both ends.  None of the samples
// collides with a critical value.
inline std::vector<Rational> probe_points(std::vector<Rational> critical) {
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  std::vector<Rational> probes;
  if (critical.empty()) {
    probes.push_back(Rational(0));
    return probes;
  }
  probes.push_back(critical.front() - 1);
  for (std::size_t i = 0; i + 1 < critical.size(); ++i)
    probes.push_back((critical[i] + critical[i + 1]) / 2);
  probes.push_back(critical.back() + 1);
  return probes;
}

// All finite endpoints of a set plus the finite ambient bounds.
inline std::vector<Rational> critical_values(const ElementarySet& e) {
  std::vector<Rational> out;
  for (const Interval& iv : e.intervals()) {
    if (iv.lo.finite()) out.push_back(iv.lo.value());
    if (iv.hi.finite()) out.push_back(iv.hi.value());
  }
  if (e.ambient().lo().finite()) out.push_back(e.ambient().lo().value());
  if (e.ambient().hi().finite()) out.push_back(e.ambient().hi().value());
  return out;
}

inline bool inside_ambient_interior(const Ambient& ambient, const Rational& x) {
  ExtendedRational p(x);
  return ambient.lo() < p && p < ambient.hi();
}

}  // namespace credal::testing
