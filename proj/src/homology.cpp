#include "vbt/homology.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "vbt/errors.hpp"

namespace vbt {

namespace {

// Sum of the token's class into coords, or a ValidationError.
void accumulate(const MarkedSurfaceSpec& spec, const std::string& token,
                std::vector<long long>& coords) {
  std::string name = token;
  long long sign = 1;
  while (!name.empty() && name.back() == '\'') {
    sign = -sign;
    name.pop_back();
  }
  if (name.empty()) throw ValidationError("empty class token");

  char head = name[0];
  std::string digits = name.substr(1);
  bool numeric =
      !digits.empty() &&
      std::all_of(digits.begin(), digits.end(),
                  [](unsigned char c) { return std::isdigit(c); });
  int index = numeric ? std::atoi(digits.c_str()) : 0;

  int b = static_cast<int>(spec.marked_per_boundary.size());
  int obstacles = (b - 1) + spec.punctures;
  int twist_rank = 2 * spec.genus + b + spec.punctures - 1;

  auto need_index = [&](int bound, const char* what) {
    if (!numeric || index < 1 || index > bound)
      throw ValidationError("class " + token + " is outside the " + what +
                            " range");
  };

  switch (head) {
    case 'x':
    case 'y':
      if (!digits.empty() && !numeric)
        throw ValidationError("unknown class token: " + token);
      return;  // conjugated twist classes
    case 's':
      need_index(decoration_count(spec) - 1, "sigma");
      return;
    case 't':
      need_index(twist_rank, "tau");
      return;
    case 'u':
      need_index(spec.punctures, "u");
      return;
    case 'b':
      if (!numeric || index < 1)
        throw ValidationError("unknown class token: " + token);
      return;  // cluster braid twist
    case 'c':
      need_index(twist_rank, "Taurus");
      return;  // commutator of twists
    case 'e':
    case 'L':
      need_index(obstacles, "obstacle");
      coords[2 * spec.genus + index - 1] += sign;
      return;
    default:
      throw ValidationError("unknown class token: " + token);
  }
}

}  // namespace

bool AJVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](long long v) { return v == 0; });
}

bool AJVortexClass::is_zero() const {
  return std::all_of(free_part.begin(), free_part.end(),
                     [](long long v) { return v == 0; }) &&
         std::all_of(torsion_part.begin(), torsion_part.end(),
                     [](int v) { return v == 0; });
}

AJVector aj(const MarkedSurfaceSpec& spec, const std::string& word) {
  spec.validate();
  int b = static_cast<int>(spec.marked_per_boundary.size());
  AJVector out;
  out.coords.assign(2 * spec.genus + (b - 1) + spec.punctures, 0);

  std::istringstream stream(word);
  std::string token;
  while (stream >> token) accumulate(spec, token, out.coords);
  return out;
}

AJVortexClass aj_vortex(const MarkedSurfaceSpec& spec,
                        const std::string& word) {
  AJVector full = aj(spec, word);
  int b = static_cast<int>(spec.marked_per_boundary.size());
  std::size_t split = static_cast<std::size_t>(2 * spec.genus + b - 1);

  AJVortexClass out;
  out.free_part.assign(full.coords.begin(), full.coords.begin() + split);
  for (std::size_t i = split; i < full.coords.size(); ++i)
    out.torsion_part.push_back(
        static_cast<int>(((full.coords[i] % 2) + 2) % 2));
  return out;
}

AJVector aj_of_relator(const MarkedSurfaceSpec& spec,
                       const GroupPresentation& p, const Word& relator) {
  std::string word;
  for (int letter : relator) {
    if (letter == 0 ||
        std::abs(letter) > static_cast<int>(p.generators.size()))
      throw ValidationError("relator letter outside the generator range");
    if (!word.empty()) word += ' ';
    word += p.generators[std::abs(letter) - 1];
    if (letter < 0) word += '\'';
  }
  return aj(spec, word);
}

bool is_identity(const PermutationImage& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i) + 1) return false;
  return true;
}

PermutationImage permutation_quotient(const GroupPresentation& p,
                                      const Word& word) {
  if (p.endpoints.size() != p.generators.size())
    throw ValidationError("presentation carries no endpoint data");

  int degree = 0;
  for (const auto& [a, b] : p.endpoints) degree = std::max({degree, a, b});

  PermutationImage perm(degree);
  std::iota(perm.begin(), perm.end(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int gen = std::abs(*it);
    if (gen == 0 || gen > static_cast<int>(p.generators.size()))
      throw ValidationError("word letter outside the generator range");
    auto [a, b] = p.endpoints[gen - 1];
    if (a < 1 || b < 1 || a == b)
      throw ValidationError("class " + p.generators[gen - 1] +
                            " carries no decoration endpoint pair");
    for (int& v : perm) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
  }
  return perm;
}

}  // namespace vbt
