#include "chevalley/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chev {

namespace {

std::vector<std::vector<int>> family_cartan(char family, int n) {
  auto chain = [](int size) {
    std::vector<std::vector<int>> c(size, std::vector<int>(size, 0));
    for (int i = 0; i < size; ++i) {
      c[i][i] = 2;
      if (i + 1 < size) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
    }
    return c;
  };
  switch (family) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      auto c = chain(n);
      c[n - 2][n - 1] = -2;  // alpha_n short
      return c;
    }
    case 'C': {
      if (n < 2) break;
      auto c = chain(n);
      c[n - 1][n - 2] = -2;  // alpha_n long
      return c;
    }
    case 'D': {
      if (n < 4) break;
      auto c = chain(n);
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      return c;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4.
      std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
      auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      for (int i = 0; i < n; ++i) c[i][i] = 2;
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      return c;
    }
    case 'F': {
      if (n != 4) break;
      auto c = chain(4);
      c[1][2] = -2;  // alpha_1, alpha_2 long
      return c;
    }
    case 'G': {
      if (n != 2) break;
      return {{2, -1}, {-3, 2}};  // alpha_1 short
    }
    default:
      break;
  }
  throw InvalidCartan(std::string("no root system of type ") + family + std::to_string(n));
}

int rank_of(std::vector<RootVec> const& rows) {
  // fraction-free elimination on a copy
  std::vector<std::vector<long long>> m;
  for (auto const& r : rows) m.emplace_back(r.begin(), r.end());
  if (m.empty()) return 0;
  std::size_t const cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      long long f = m[r][c];
      long long p = m[rank][c];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * p - m[rank][k] * f;
      long long g = 0;
      for (auto v : m[r]) g = std::gcd(g, v < 0 ? -v : v);
      if (g > 1)
        for (auto& v : m[r]) v /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string to_string(Rank2Type t) {
  switch (t) {
    case Rank2Type::A2:
      return "A2";
    case Rank2Type::B2:
      return "B2";
    case Rank2Type::G2:
      return "G2";
  }
  return "?";
}

std::string to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::A2OrLong:
      return "A2/long";
    case WitnessCase::B2Short:
      return "B2-short";
    case WitnessCase::G2Short:
      return "G2-short";
  }
  return "?";
}

std::optional<WitnessCase> parse_witness_case(std::string const& label) {
  if (label == "A2/long" || label == "A2" || label == "long") return WitnessCase::A2OrLong;
  if (label == "B2-short") return WitnessCase::B2Short;
  if (label == "G2-short") return WitnessCase::G2Short;
  return std::nullopt;
}

RootSystem RootSystem::build(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  return from_cartan(family_cartan(family, rank), {{family, rank}});
}

RootSystem RootSystem::parse(std::string const& selector) {
  std::vector<std::vector<int>> blocks_cartan;
  std::vector<Component> label;
  std::size_t pos = 0;
  if (selector.empty()) {
    throw InvalidCartan("empty root-system selector");
  }
  while (pos < selector.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(selector[pos])));
    ++pos;
    std::size_t start = pos;
    while (pos < selector.size() && std::isdigit(static_cast<unsigned char>(selector[pos]))) ++pos;
    if (start == pos || pos - start > 3) {
      throw InvalidCartan("bad root-system selector: " + selector);
    }
    int r = std::stoi(selector.substr(start, pos - start));
    auto block = family_cartan(fam, r);
    std::size_t const offset = blocks_cartan.size();
    for (auto& row : blocks_cartan) row.resize(offset + r, 0);
    for (int i = 0; i < r; ++i) {
      std::vector<int> row(offset + r, 0);
      for (int j = 0; j < r; ++j) row[offset + j] = block[i][j];
      blocks_cartan.push_back(std::move(row));
    }
    label.push_back({fam, r});
    if (pos < selector.size()) {
      if (selector[pos] != 'x' && selector[pos] != 'X') {
        throw InvalidCartan("bad root-system selector: " + selector);
      }
      ++pos;
      if (pos == selector.size()) {
        throw InvalidCartan("bad root-system selector: " + selector);
      }
    }
  }
  return from_cartan(std::move(blocks_cartan), std::move(label));
}

RootSystem RootSystem::from_cartan(std::vector<std::vector<int>> cartan,
                                   std::vector<Component> label) {
  std::size_t const n = cartan.size();
  if (n == 0) {
    throw InvalidCartan("empty Cartan matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n) throw InvalidCartan("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw InvalidCartan("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0 || cartan[i][j] < -3) throw InvalidCartan("bad off-diagonal entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw InvalidCartan("Cartan zero pattern is not symmetric");
      if (cartan[i][j] * cartan[j][i] > 3) throw InvalidCartan("Cartan product exceeds 3");
    }
  }
  RootSystem rs;
  rs.cartan_ = std::move(cartan);
  rs.label_ = std::move(label);
  rs.compute_lengths();
  rs.compute_roots();
  return rs;
}

void RootSystem::compute_lengths() {
  std::size_t const n = rank();
  // rational squared lengths as num/den, propagated along the Dynkin graph
  std::vector<long long> num(n, 0), den(n, 1);
  for (auto const& comp : component_simple_roots()) {
    num[comp[0]] = 1;
    std::vector<std::size_t> stack{comp[0]};
    std::set<std::size_t> seen{comp[0]};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0) continue;
        // cartan[i][j] L_j = cartan[j][i] L_i
        long long nn = num[i] * cartan_[j][i];
        long long dd = den[i] * cartan_[i][j];
        if (dd < 0) {
          nn = -nn;
          dd = -dd;
        }
        long long g = std::gcd(nn, dd);
        nn /= g;
        dd /= g;
        if (seen.count(j)) {
          if (nn * den[j] != num[j] * dd) throw InvalidCartan("Cartan matrix is not symmetrizable");
          continue;
        }
        num[j] = nn;
        den[j] = dd;
        seen.insert(j);
        stack.push_back(j);
      }
    }
    // scale so the shortest simple root of the component has squared length 2
    long long lcm_den = 1;
    for (auto i : comp) lcm_den = std::lcm(lcm_den, den[i]);
    std::vector<long long> scaled;
    for (auto i : comp) scaled.push_back(num[i] * (lcm_den / den[i]));
    long long mn = *std::min_element(scaled.begin(), scaled.end());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      if ((scaled[k] * 2) % mn != 0) throw InvalidCartan("root lengths are not commensurable");
      num[comp[k]] = scaled[k] * 2 / mn;
      den[comp[k]] = 1;
    }
  }
  simple_len_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) simple_len_[i] = static_cast<int>(num[i]);
}

void RootSystem::compute_roots() {
  std::size_t const n = rank();
  std::vector<RootVec> positive;
  std::set<RootVec> known;
  for (std::size_t i = 0; i < n; ++i) {
    RootVec v(n, 0);
    v[i] = 1;
    positive.push_back(v);
    known.insert(v);
  }
  // Extend by simple roots via root strings: beta + alpha_i is a root iff
  // q > 0 where q - p = -<beta, alpha_i>.
  constexpr std::size_t kMaxRoots = 4096;
  for (std::size_t idx = 0; idx < positive.size(); ++idx) {
    RootVec beta = positive[idx];
    for (std::size_t i = 0; i < n; ++i) {
      RootVec down = beta;
      int p = 0;
      while (true) {
        down[i] -= 1;
        if (!known.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
      int q = p - pairing;
      if (q > 0) {
        RootVec up = beta;
        up[i] += 1;
        if (known.insert(up).second) {
          positive.push_back(up);
          if (positive.size() > kMaxRoots) throw InvalidCartan("Cartan matrix is not of finite type");
        }
      }
    }
  }
  auto height_of = [](RootVec const& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(positive.begin(), positive.end(), [&](RootVec const& a, RootVec const& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;  // keeps alpha_1, ..., alpha_r at indices 0..r-1
  });
  roots_ = positive;
  for (auto const& v : positive) {
    RootVec neg(v);
    for (auto& c : neg) c = -c;
    roots_.push_back(neg);
  }
  index_.clear();
  for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
  sq_len_.clear();
  for (auto const& r : roots_) sq_len_.push_back(inner(r, r));

  auto comps = component_simple_roots();
  root_component_.assign(roots_.size(), 0);
  std::vector<int> comp_max(comps.size(), 0);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (std::any_of(comps[c].begin(), comps[c].end(), [&](std::size_t s) { return roots_[i][s] != 0; })) {
        root_component_[i] = c;
        break;
      }
    }
    comp_max[root_component_[i]] = std::max(comp_max[root_component_[i]], sq_len_[i]);
  }
  is_long_.assign(roots_.size(), false);
  for (std::size_t i = 0; i < roots_.size(); ++i) is_long_[i] = sq_len_[i] == comp_max[root_component_[i]];
}

std::string RootSystem::label_string() const {
  std::string out;
  for (std::size_t i = 0; i < label_.size(); ++i) {
    if (i) out += "x";
    out += label_[i].family + std::to_string(label_[i].rank);
  }
  return out.empty() ? "custom" : out;
}

std::optional<std::size_t> RootSystem::index_of(RootVec const& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::negative_of(std::size_t i) const {
  std::size_t const np = num_positive();
  return i < np ? i + np : i - np;
}

int RootSystem::height(std::size_t i) const {
  return std::accumulate(roots_[i].begin(), roots_[i].end(), 0);
}

bool RootSystem::is_long(std::size_t i) const { return is_long_[i]; }

int RootSystem::inner(RootVec const& a, RootVec const& b) const {
  int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      // (alpha_i, alpha_j) = cartan[i][j] * L_j / 2
      s += a[i] * b[j] * cartan_[i][j] * simple_len_[j] / 2;
    }
  }
  return s;
}

int RootSystem::cartan_int(RootVec const& beta, RootVec const& alpha) const {
  int aa = inner(alpha, alpha);
  if (aa == 0) throw std::invalid_argument("cartan_int with zero alpha");
  return 2 * inner(beta, alpha) / aa;
}

int RootSystem::cartan_int(std::size_t beta, std::size_t alpha) const {
  return cartan_int(roots_[beta], roots_[alpha]);
}

std::vector<std::vector<std::size_t>> RootSystem::component_simple_roots() const {
  std::size_t const n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && cartan_[i][j] != 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<RootSystem> RootSystem::irreducible_components() const {
  std::vector<RootSystem> out;
  auto comps = component_simple_roots();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto const& members = comps[c];
    std::vector<std::vector<int>> sub(members.size(), std::vector<int>(members.size()));
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b < members.size(); ++b) sub[a][b] = cartan_[members[a]][members[b]];
    std::vector<Component> lbl;
    if (comps.size() == label_.size()) lbl.push_back(label_[c]);
    out.push_back(from_cartan(std::move(sub), std::move(lbl)));
  }
  return out;
}

std::size_t RootSystem::component_of_root(std::size_t i) const { return root_component_[i]; }

std::map<std::pair<int, int>, std::size_t> RootSystem::positive_combinations(
    std::size_t beta, std::size_t gamma) const {
  std::map<std::pair<int, int>, std::size_t> out;
  // root strings have length at most 4, so coefficients stay below 4
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      RootVec v(rank());
      for (std::size_t k = 0; k < rank(); ++k) v[k] = i * roots_[beta][k] + j * roots_[gamma][k];
      if (auto idx = index_of(v)) out[{i, j}] = *idx;
    }
  }
  return out;
}

std::vector<std::size_t> RootSystem::span_subsystem(std::size_t beta, std::size_t gamma) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    if (rank_of({roots_[beta], roots_[gamma], roots_[r]}) <= 2) out.push_back(r);
  }
  return out;
}

Rank2Embedding RootSystem::find_witness_pair(std::size_t alpha) const {
  std::optional<Rank2Embedding> best;
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    RootVec rest(rank());
    for (std::size_t k = 0; k < rank(); ++k) rest[k] = roots_[alpha][k] - roots_[b][k];
    auto g = index_of(rest);
    if (!g) continue;
    std::size_t const c = *g;
    if (rank_of({roots_[b], roots_[c]}) < 2) continue;

    auto psi = span_subsystem(b, c);
    Rank2Type type;
    if (psi.size() == 6) {
      type = Rank2Type::A2;
    } else if (psi.size() == 8) {
      type = Rank2Type::B2;
    } else if (psi.size() == 12) {
      type = Rank2Type::G2;
    } else {
      continue;
    }
    int max_len = 0;
    for (auto r : psi) max_len = std::max(max_len, sq_len_[r]);
    bool const alpha_long = sq_len_[alpha] == max_len;

    auto combos = positive_combinations(b, c);
    auto is_long_in_psi = [&](std::size_t r) { return sq_len_[r] == max_len; };
    auto has = [&](int i, int j) { return combos.count({i, j}) > 0; };
    std::optional<WitnessCase> wcase;
    if (type == Rank2Type::A2 || alpha_long) {
      if (combos.size() == 1) wcase = WitnessCase::A2OrLong;
    } else if (type == Rank2Type::B2) {
      if (combos.size() == 2 && has(1, 2) && is_long_in_psi(combos.at({1, 2})))
        wcase = WitnessCase::B2Short;
    } else {
      if (combos.size() == 3 && has(1, 2) && has(2, 1) && is_long_in_psi(combos.at({1, 2})) &&
          is_long_in_psi(combos.at({2, 1})))
        wcase = WitnessCase::G2Short;
    }
    if (!wcase) continue;

    // b ascends in root order and determines c, so the first hit is the
    // least pair under that order.
    best = Rank2Embedding{std::move(psi), type, *wcase, alpha, b, c};
    break;
  }
  if (!best) {
    throw WitnessPairNotFound("no rank-2 witness pair for root " + root_name(alpha) +
                              " (component of rank 1?)");
  }
  return *best;
}

std::string RootSystem::root_name(std::size_t i) const { return root_name(roots_[i]); }

std::string RootSystem::root_name(RootVec const& v) const {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    int c = v[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    int a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += 'a' + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::size_t RootSystem::parse_root(std::string const& text) const {
  RootVec v(rank(), 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '+' && !any) throw std::invalid_argument("bad root: " + text);
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw std::invalid_argument("bad root: " + text);
    }
    int coef = 1;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) coef = std::stoi(text.substr(start, pos - start));
    if (pos >= text.size() || text[pos] != 'a') throw std::invalid_argument("bad root: " + text);
    ++pos;
    start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("bad root: " + text);
    std::size_t idx = std::stoul(text.substr(start, pos - start));
    if (idx == 0 || idx > rank()) throw std::invalid_argument("simple root index out of range: " + text);
    v[idx - 1] += sign * coef;
    any = true;
  }
  auto r = index_of(v);
  if (!r) throw std::invalid_argument("not a root: " + text);
  return *r;
}

}  // namespace chev
