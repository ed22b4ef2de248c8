#include "diagprop/catalog.hpp"

#include <map>
#include <mutex>

namespace diagprop {

namespace {
std::mutex cache_mutex;
}

RingPtr chow_quadric_ring(int m) {
  if (m < 2) fail(Errc::BadM, "odd-quadric ring needs m >= 2, got " + std::to_string(m));
  static std::map<int, RingPtr> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  const unsigned um = static_cast<unsigned>(m);
  RingPresentation p;
  p.id = "CH(Q" + std::to_string(2 * m - 1) + ")";
  p.companion_id = "H(Q" + std::to_string(2 * m - 1) + ";Z2)";
  p.generators = {{"x", 2}, {"y", 2 * um}};
  p.companion_generator_names = {"xi", "eta"};
  p.relations.push_back({{um, 0}, {{{0, 1}, 2}}});  // x^m -> 2y
  p.relations.push_back({{0, 2}, {}});              // y^2 -> 0
  p.top_degree = 4 * um - 2;
  p.fundamental_monomial = {um - 1, 1};  // x^(m-1) y
  auto ring = GradedRing::make(std::move(p));
  cache.emplace(m, ring);
  return ring;
}

RingPtr mod2_quadric_ring(int m) { return chow_quadric_ring(m)->companion_mod2(); }

RingPtr projective_space_ring(int n) {
  if (n < 1)
    fail(Errc::InvalidPresentation, "projective space ring needs n >= 1, got " + std::to_string(n));
  static std::map<int, RingPtr> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const unsigned un = static_cast<unsigned>(n);
  RingPresentation p;
  p.id = "CH(P" + std::to_string(n) + ")";
  p.companion_id = "H(P" + std::to_string(n) + ";Z2)";
  p.generators = {{"h", 2}};
  p.relations.push_back({{un + 1}, {}});  // h^(n+1) -> 0
  p.top_degree = 2 * un;
  p.fundamental_monomial = {un};
  auto ring = GradedRing::make(std::move(p));
  cache.emplace(n, ring);
  return ring;
}

RingPtr ring_by_id(const std::string& id) {
  std::string base = id;
  bool mod2 = false;
  if (base.size() > 3 && base.substr(base.size() - 3) == "_z2") {
    mod2 = true;
    base = base.substr(0, base.size() - 3);
  }
  auto numeric_suffix = [](const std::string& s) -> int {
    if (s.size() < 2) return -1;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return -1;
    return std::stoi(s.substr(1));
  };
  RingPtr ring;
  if (base[0] == 'q') {
    int n = numeric_suffix(base);
    if (n >= 3 && n % 2 == 1) ring = chow_quadric_ring((n + 1) / 2);
  } else if (base[0] == 'p') {
    int n = numeric_suffix(base);
    if (n >= 1) ring = projective_space_ring(n);
  }
  if (!ring)
    fail(Errc::UnknownKind,
         "unknown ring id '" + id +
             "'; accepted: q<odd n >= 3>, p<n >= 1>, optionally suffixed _z2");
  return mod2 ? ring->companion_mod2() : ring;
}

}  // namespace diagprop
