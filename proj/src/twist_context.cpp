#include "vbt/twist_context.hpp"

#include <cctype>
#include <stdexcept>

#include "vbt/errors.hpp"

namespace vbt {

namespace {

int parse_index(const std::string& token, std::size_t from, std::size_t to) {
  if (from >= to) throw ValidationError("token '" + token + "' is missing an index");
  int value = 0;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw ValidationError("malformed token '" + token + "'");
    value = value * 10 + (token[i] - '0');
  }
  return value;
}

} // namespace

TwistContext::TwistContext(const MarkedSurfaceSpec& spec) : spec_(spec) {
  spec_.validate();
  if (spec_.genus != 0)
    throw UnsupportedModelError("the planar verification model covers genus 0 only");
  if (spec_.boundary_count() == 0)
    throw UnsupportedModelError("the planar verification model needs a boundary component");
  aleph_ = decoration_count(spec_);
  holes_ = spec_.boundary_count() - 1;
  obstacles_ = holes_ + spec_.punctures;
  rank_ = aleph_ + obstacles_;
  if (aleph_ < 2)
    throw UnsupportedModelError("the planar verification model needs at least two decorations");

  m_ = identity_class(rank_);
  for (int j = 1; j <= aleph_ - 1; ++j) m_ = mul(artin_half_twist(j, -1), m_);

  sigma_.assign(static_cast<std::size_t>(aleph_), MappingClass{});
  tau_.assign(static_cast<std::size_t>(obstacles_) + 1, MappingClass{});
  epsilon_.assign(static_cast<std::size_t>(obstacles_) + 1, MappingClass{});
}

MappingClass TwistContext::artin_half_twist(int j, int e) const {
  if (j < 1 || j + 1 > rank_)
    throw ValidationError("half twist position out of range");
  return half_twist(rank_, j, e);
}

MappingClass TwistContext::block(int a, int b, int o) const {
  if (a < 1 || b > rank_ || a > b)
    throw ValidationError("block twist range out of range");
  return block_twist(rank_, a, b, o);
}

const MappingClass& TwistContext::sigma(int i) const {
  if (i < 1 || i > aleph_ - 1)
    throw ValidationError("sigma index out of range");
  auto& slot = sigma_[static_cast<std::size_t>(i)];
  if (slot.fwd.rank == 0) slot = artin_half_twist(i, +1);
  return slot;
}

const MappingClass& TwistContext::epsilon(int t) const {
  if (t < 0 || t > obstacles_)
    throw ValidationError("epsilon index out of range");
  auto& slot = epsilon_[static_cast<std::size_t>(t)];
  if (slot.fwd.rank == 0) {
    if (t == 0) {
      slot = identity_class(rank_);
    } else {
      slot = eval_product(rank_, {{m_, -1},
                                  {block(aleph_, aleph_ + t, +1), 1},
                                  {block(aleph_ + 1, aleph_ + t, -1), 1},
                                  {m_, 1}});
    }
  }
  return slot;
}

const MappingClass& TwistContext::tau(int r) const {
  if (r < 0 || r > obstacles_)
    throw ValidationError("tau index out of range");
  auto& slot = tau_[static_cast<std::size_t>(r)];
  if (slot.fwd.rank == 0)
    slot = (r == 0) ? sigma(1) : conjugate(sigma(1), epsilon(r).inverse());
  return slot;
}

MappingClass TwistContext::l_delta(int r) const {
  if (r < 1 || r > obstacles_)
    throw ValidationError("L-twist index out of range");
  return mul(epsilon(r), epsilon(r - 1).inverse());
}

MappingClass TwistContext::taurus(int r) const {
  if (r < 1 || r > obstacles_)
    throw ValidationError("taurus index out of range");
  return commutator(tau(r), tau(r - 1));
}

MappingClass TwistContext::x() const {
  return eval_product(rank_, {{sigma(2), 1}, {sigma(1), 1}, {sigma(2), -1}});
}

MappingClass TwistContext::y() const {
  return eval_product(rank_, {{sigma(2), 1}, {sigma(3), 1}, {sigma(2), -1}});
}

MappingClass TwistContext::collision_twist(int r) const {
  if (r < 1 || r > obstacles_)
    throw ValidationError("collision index out of range");
  MappingClass psi = identity_class(rank_);
  for (int j = aleph_ + r - 1; j >= 2; --j) psi = mul(artin_half_twist(j, +1), psi);
  return eval_product(rank_, {{psi, -1}, {artin_half_twist(1, +1), 1}, {psi, 1}});
}

MappingClass TwistContext::conjugated_collision_twist(int r, const MappingClass& psi) const {
  return conjugate(collision_twist(r), psi);
}

std::pair<MappingClass, MappingClass> TwistContext::digon_pair(int r) const {
  if (r < 1 || r > obstacles_)
    throw ValidationError("digon index out of range");
  MappingClass s2 = collision_twist(r);
  MappingClass psi1 = identity_class(rank_);
  for (int j = aleph_ + r - 1; j >= 3; --j) {
    int s = (j >= aleph_ + 1) ? -1 : +1;
    psi1 = mul(artin_half_twist(j, s), psi1);
  }
  MappingClass s1 =
      eval_product(rank_, {{psi1, -1}, {artin_half_twist(2, +1), 1}, {psi1, 1}});
  return {s1, s2};
}

MappingClass TwistContext::elementary_push(int k) const {
  if (k < aleph_ + 1 || k > rank_)
    throw ValidationError("push position out of range");
  MappingClass u = identity_class(rank_);
  for (int j = 1; j <= k - 2; ++j) {
    int e = (j + 1 <= aleph_) ? -1 : +1;
    u = mul(artin_half_twist(j, e), u);
  }
  return eval_product(rank_, {{u, -1}, {block(k - 1, k, +1), 1}, {u, 1}});
}

MappingClass TwistContext::push(const std::vector<int>& loop) const {
  MappingClass acc = identity_class(rank_);
  for (auto it = loop.rbegin(); it != loop.rend(); ++it) {
    int s = *it;
    if (s == 0 || s > obstacles_ || s < -obstacles_)
      throw ValidationError("push letter out of range");
    MappingClass step = elementary_push(aleph_ + (s > 0 ? s : -s));
    acc = mul(acc, s > 0 ? step : step.inverse());
  }
  return acc;
}

MappingClass TwistContext::named(const std::string& token) const {
  if (token.empty()) throw ValidationError("empty generator token");
  bool invert = token.back() == '\'';
  std::string body = invert ? token.substr(0, token.size() - 1) : token;
  if (body.empty()) throw ValidationError("malformed token '" + token + "'");
  MappingClass value;
  if (body == "x") {
    value = x();
  } else if (body == "y") {
    value = y();
  } else {
    char head = body.front();
    int idx = parse_index(body, 1, body.size());
    switch (head) {
      case 's': value = sigma(idx); break;
      case 't': value = tau(idx); break;
      case 'e': value = epsilon(idx); break;
      case 'L': value = l_delta(idx); break;
      case 'c': value = taurus(idx); break;
      case 'B': value = collision_twist(idx); break;
      default: throw ValidationError("unknown generator token '" + token + "'");
    }
  }
  return invert ? value.inverse() : value;
}

MappingClass TwistContext::eval(const std::string& word) const {
  MappingClass acc = identity_class(rank_);
  std::size_t i = 0;
  while (i < word.size()) {
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
    std::size_t j = i;
    while (j < word.size() && !std::isspace(static_cast<unsigned char>(word[j]))) ++j;
    if (j > i) acc = mul(acc, named(word.substr(i, j - i)));
    i = j;
  }
  return acc;
}

} // namespace vbt
