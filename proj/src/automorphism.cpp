#include "vbt/automorphism.hpp"

#include <cstdlib>

namespace vbt {

Word FreeAutomorphism::apply(const Word& w) const {
  Word out;
  for (int s : w) {
    const Word& piece = img[static_cast<std::size_t>(std::abs(s)) - 1];
    if (s > 0) {
      for (int t : piece) push_reduced(out, t);
    } else {
      for (auto it = piece.rbegin(); it != piece.rend(); ++it)
        push_reduced(out, -*it);
    }
  }
  return out;
}

bool FreeAutomorphism::is_identity() const {
  for (int i = 0; i < rank; ++i) {
    const Word& w = img[static_cast<std::size_t>(i)];
    if (w.size() != 1 || w[0] != i + 1) return false;
  }
  return true;
}

FreeAutomorphism identity_automorphism(int rank) {
  FreeAutomorphism a;
  a.rank = rank;
  a.img.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) a.img.push_back({i});
  return a;
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank != b.rank) throw ValidationError("automorphism rank mismatch");
  FreeAutomorphism r;
  r.rank = a.rank;
  r.img.reserve(b.img.size());
  for (const Word& w : b.img) r.img.push_back(a.apply(w));
  return r;
}

MappingClass identity_class(int rank) {
  return {identity_automorphism(rank), identity_automorphism(rank)};
}

MappingClass mul(const MappingClass& a, const MappingClass& b) {
  return {compose(a.fwd, b.fwd), compose(b.bwd, a.bwd)};
}

MappingClass conjugate(const MappingClass& a, const MappingClass& b) {
  return mul(mul(b.inverse(), a), b);
}

MappingClass commutator(const MappingClass& a, const MappingClass& b) {
  return mul(mul(mul(a, b), a.inverse()), b.inverse());
}

MappingClass MappingClass::power(int k) const {
  MappingClass r = identity_class(rank());
  const MappingClass x = k >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(k); ++i) r = mul(r, x);
  return r;
}

MappingClass eval_product(int rank,
                          const std::vector<std::pair<MappingClass, int>>& items) {
  MappingClass r = identity_class(rank);
  for (const auto& [m, e] : items) r = mul(r, m.power(e));
  return r;
}

void check_inverse_pair(const MappingClass& m) {
  if (!compose(m.fwd, m.bwd).is_identity() ||
      !compose(m.bwd, m.fwd).is_identity())
    throw ValidationError("mapping class inverse tables are not inverse");
}

MappingClass half_twist(int rank, int j, int e) {
  if (j < 1 || j >= rank) throw ValidationError("half twist position out of range");
  FreeAutomorphism f = identity_automorphism(rank);
  FreeAutomorphism b = identity_automorphism(rank);
  f.img[static_cast<std::size_t>(j) - 1] = {j, j + 1, -j};
  f.img[static_cast<std::size_t>(j)] = {j};
  b.img[static_cast<std::size_t>(j) - 1] = {j + 1};
  b.img[static_cast<std::size_t>(j)] = {-(j + 1), j, j + 1};
  MappingClass m{f, b};
  return e > 0 ? m : m.inverse();
}

MappingClass block_twist(int rank, int a, int b, int o) {
  if (a < 1 || b > rank || a > b)
    throw ValidationError("block twist range out of bounds");
  Word w;
  for (int k = a; k <= b; ++k) w.push_back(k);
  const Word wi = inverse(w);
  FreeAutomorphism f = identity_automorphism(rank);
  FreeAutomorphism g = identity_automorphism(rank);
  for (int k = a; k <= b; ++k) {
    f.img[static_cast<std::size_t>(k) - 1] = reduced(concat(concat(w, {k}), wi));
    g.img[static_cast<std::size_t>(k) - 1] = reduced(concat(concat(wi, {k}), w));
  }
  MappingClass m{f, g};
  return o > 0 ? m : m.inverse();
}

} // namespace vbt
