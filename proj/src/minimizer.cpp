#include "mvq/minimizer.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>

namespace mvq {

namespace {

int literal_rank(Cube::Lit lit) {
  switch (lit) {
    case Cube::Lit::One: return 0;
    case Cube::Lit::Zero: return 1;
    case Cube::Lit::Dash: return 2;
  }
  return 3;
}

void check_var_count(int n) {
  if (n < 0 || n > kMaxSpecVars) {
    throw std::invalid_argument("variable count must be in 0.." + std::to_string(kMaxSpecVars));
  }
}

using CoverKey = std::tuple<int, int, std::vector<Cube>>;

CoverKey cover_key(std::vector<Cube> cubes) {
  std::sort(cubes.begin(), cubes.end());
  int literals = 0;
  for (const auto& c : cubes) {
    literals += c.literal_count();
  }
  return {static_cast<int>(cubes.size()), literals, std::move(cubes)};
}

using RowSet = std::bitset<std::size_t{1} << kMaxSpecVars>;

/// Exact minimum cover by branch and bound. Each node branches on the
/// uncovered minterm with the fewest usable primes; branch i takes prime i
/// and excludes primes 0..i-1.
class CoverSearch {
public:
  CoverSearch(const std::vector<Cube>& primes, const TruthTableSpec& spec)
      : primes_(primes), banned_(primes.size(), false), by_row_(spec.row_count()) {
    for (const auto& p : primes_) {
      RowSet rows;
      for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
        if (p.covers(row) && spec.at(row) == Tri::One) {
          rows.set(row);
        }
      }
      covers_.push_back(rows);
    }
    for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
      if (spec.at(row) != Tri::One) {
        continue;
      }
      on_.set(row);
      for (std::size_t p = 0; p < primes_.size(); ++p) {
        if (covers_[p].test(row)) {
          by_row_[row].push_back(p);
        }
      }
    }
  }

  std::vector<Cube> run() {
    search(on_, 0, 0);
    return best_ ? std::get<2>(*best_) : std::vector<Cube>{};
  }

private:
  void search(const RowSet& uncovered, int terms, int literals) {
    if (uncovered.none()) {
      std::vector<Cube> cubes;
      for (auto p : chosen_) {
        cubes.push_back(primes_[p]);
      }
      auto key = cover_key(std::move(cubes));
      if (!best_ || key < *best_) {
        best_ = std::move(key);
      }
      return;
    }
    const auto dropped = drop_dominated(uncovered);
    explore(uncovered, terms, literals);
    for (auto p : dropped) {
      banned_[p] = false;
    }
  }

  /// Bans every prime whose remaining coverage is contained in that of a
  /// prime ranked lower by (literals, cube order). Swapping one for the
  /// other never makes a cover worse.
  std::vector<std::size_t> drop_dominated(const RowSet& uncovered) {
    std::vector<std::size_t> active;
    std::vector<RowSet> gain;
    for (std::size_t p = 0; p < primes_.size(); ++p) {
      if (!banned_[p]) {
        const RowSet g = covers_[p] & uncovered;
        if (g.any()) {
          active.push_back(p);
          gain.push_back(g);
        }
      }
    }
    auto ranks_before = [&](std::size_t q, std::size_t p) {
      const int lq = primes_[q].literal_count();
      const int lp = primes_[p].literal_count();
      return lq != lp ? lq < lp : primes_[q] < primes_[p];
    };
    std::vector<std::size_t> dropped;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (i != j && (gain[i] & ~gain[j]).none() && ranks_before(active[j], active[i])) {
          dropped.push_back(active[i]);
          break;
        }
      }
    }
    for (auto p : dropped) {
      banned_[p] = true;
    }
    return dropped;
  }

  void explore(const RowSet& uncovered, int terms, int literals) {
    struct RowInfo {
      std::size_t width;
      std::uint32_t row;
      int cheapest;
      RowSet reach;
    };
    std::vector<RowInfo> rows;
    for (std::uint32_t row = 0; row < by_row_.size(); ++row) {
      if (!uncovered.test(row)) {
        continue;
      }
      RowInfo info{0, row, INT_MAX, {}};
      for (auto p : by_row_[row]) {
        if (!banned_[p]) {
          ++info.width;
          info.cheapest = std::min(info.cheapest, primes_[p].literal_count());
          info.reach |= covers_[p];
        }
      }
      if (info.width == 0) {
        return;
      }
      rows.push_back(std::move(info));
    }
    std::sort(rows.begin(), rows.end(), [](const RowInfo& a, const RowInfo& b) {
      return std::tie(a.width, a.row) < std::tie(b.width, b.row);
    });

    // Rows no two of which share a usable prime each need their own term.
    int extra_terms = 0;
    int extra_literals = 0;
    RowSet blocked;
    for (const auto& info : rows) {
      if (!blocked.test(info.row)) {
        ++extra_terms;
        extra_literals += info.cheapest;
        blocked |= info.reach;
      }
    }
    if (best_) {
      const auto bound = std::make_pair(terms + extra_terms, literals + extra_literals);
      if (bound > std::make_pair(std::get<0>(*best_), std::get<1>(*best_))) {
        return;
      }
    }

    std::vector<std::size_t> options;
    for (auto p : by_row_[rows.front().row]) {
      if (!banned_[p]) {
        options.push_back(p);
      }
    }
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      const auto gain_a = (covers_[a] & uncovered).count();
      const auto gain_b = (covers_[b] & uncovered).count();
      if (gain_a != gain_b) {
        return gain_a > gain_b;
      }
      return primes_[a].literal_count() < primes_[b].literal_count();
    });
    for (auto p : options) {
      chosen_.push_back(p);
      search(uncovered & ~covers_[p], terms + 1, literals + primes_[p].literal_count());
      chosen_.pop_back();
      banned_[p] = true;
    }
    for (auto p : options) {
      banned_[p] = false;
    }
  }

  const std::vector<Cube>& primes_;
  std::vector<RowSet> covers_;
  std::vector<bool> banned_;
  std::vector<std::vector<std::size_t>> by_row_;
  RowSet on_;
  std::vector<std::size_t> chosen_;
  std::optional<CoverKey> best_;
};

bool is_literal_cube(const Cube& c) { return c.literal_count() == 1; }

/// Sort order for XOR operands: fewer literals first, then cube order.
bool operand_less(const Cube& a, const Cube& b) {
  return std::make_pair(a.literal_count(), a) < std::make_pair(b.literal_count(), b);
}

}  // namespace

// ---------------------------------------------------------------------------
// TruthTableSpec

TruthTableSpec::TruthTableSpec(std::vector<std::string> var_names, std::vector<Tri> outputs)
    : names_(std::move(var_names)), outputs_(std::move(outputs)) {
  check_var_count(static_cast<int>(names_.size()));
  if (outputs_.size() != (std::size_t{1} << names_.size())) {
    throw std::invalid_argument("truth table needs exactly 2^n output entries");
  }
}

TruthTableSpec TruthTableSpec::from_function(std::vector<std::string> var_names,
                                             const std::function<bool(std::uint32_t)>& fn) {
  check_var_count(static_cast<int>(var_names.size()));
  std::vector<Tri> outputs(std::size_t{1} << var_names.size());
  for (std::uint32_t row = 0; row < outputs.size(); ++row) {
    outputs[row] = fn(row) ? Tri::One : Tri::Zero;
  }
  return TruthTableSpec(std::move(var_names), std::move(outputs));
}

// ---------------------------------------------------------------------------
// Cube

Cube::Cube(int n_vars) : n_(static_cast<std::uint8_t>(n_vars)), care_(0), value_(0) {
  check_var_count(n_vars);
}

Cube Cube::minterm(int n_vars, std::uint32_t row) {
  check_var_count(n_vars);
  const std::uint32_t all = (std::uint32_t{1} << n_vars) - 1;
  return Cube(n_vars, all, row & all);
}

Cube Cube::parse(std::string_view text) {
  Cube cube(static_cast<int>(text.size()));
  for (int var = 0; var < cube.n_vars(); ++var) {
    switch (text[static_cast<std::size_t>(var)]) {
      case '0': cube = cube.with(var, Lit::Zero); break;
      case '1': cube = cube.with(var, Lit::One); break;
      case '-': break;
      default: throw std::invalid_argument("bad cube character in '" + std::string(text) + "'");
    }
  }
  return cube;
}

Cube::Lit Cube::literal(int var) const {
  const std::uint32_t bit = std::uint32_t{1} << (n_ - 1 - var);
  if ((care_ & bit) == 0) {
    return Lit::Dash;
  }
  return (value_ & bit) != 0 ? Lit::One : Lit::Zero;
}

Cube Cube::with(int var, Lit lit) const {
  const std::uint32_t bit = std::uint32_t{1} << (n_ - 1 - var);
  Cube c = *this;
  c.care_ &= ~bit;
  c.value_ &= ~bit;
  if (lit != Lit::Dash) {
    c.care_ |= bit;
    if (lit == Lit::One) {
      c.value_ |= bit;
    }
  }
  return c;
}

int Cube::literal_count() const { return std::popcount(care_); }

bool Cube::contains(const Cube& other) const {
  return (care_ & other.care_) == care_ && (other.value_ & care_) == value_;
}

std::string Cube::str() const {
  std::string s;
  for (int var = 0; var < n_; ++var) {
    const Lit lit = literal(var);
    s += lit == Lit::One ? '1' : lit == Lit::Zero ? '0' : '-';
  }
  return s;
}

std::string Cube::render(std::span<const std::string> names) const {
  std::string s;
  for (int var = 0; var < n_; ++var) {
    const Lit lit = literal(var);
    if (lit == Lit::Dash) {
      continue;
    }
    if (!s.empty()) {
      s += ' ';
    }
    s += names[static_cast<std::size_t>(var)];
    if (lit == Lit::Zero) {
      s += '\'';
    }
  }
  return s.empty() ? "1" : s;
}

bool Cube::adjacent(const Cube& a, const Cube& b) {
  return a.n_ == b.n_ && a.care_ == b.care_ && std::popcount(a.value_ ^ b.value_) == 1;
}

Cube Cube::merge(const Cube& a, const Cube& b) {
  const std::uint32_t diff = a.value_ ^ b.value_;
  return Cube(a.n_, a.care_ & ~diff, a.value_ & ~diff);
}

std::strong_ordering operator<=>(const Cube& a, const Cube& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) {
    return c;
  }
  for (int var = 0; var < a.n_; ++var) {
    if (auto c = literal_rank(a.literal(var)) <=> literal_rank(b.literal(var)); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// SopExpr

SopExpr::SopExpr(int n_vars, std::vector<Cube> cubes) : n_(n_vars) {
  check_var_count(n_vars);
  for (const auto& c : cubes) {
    if (c.n_vars() != n_vars) {
      throw std::invalid_argument("cube width does not match expression");
    }
  }
  std::sort(cubes.begin(), cubes.end());
  cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < cubes.size() && !covered; ++j) {
      covered = i != j && cubes[j].contains(cubes[i]);
    }
    if (!covered) {
      cubes_.push_back(cubes[i]);
    }
  }
}

int SopExpr::literal_count() const {
  int total = 0;
  for (const auto& c : cubes_) {
    total += c.literal_count();
  }
  return total;
}

bool SopExpr::evaluate(std::uint32_t row) const {
  return std::any_of(cubes_.begin(), cubes_.end(), [&](const Cube& c) { return c.covers(row); });
}

int SopExpr::two_input_gates() const {
  return FactoredExpr::from_sop(*this).two_input_gates();
}

std::string SopExpr::render(std::span<const std::string> names) const {
  if (cubes_.empty()) {
    return "0";
  }
  std::string s;
  for (const auto& c : cubes_) {
    if (!s.empty()) {
      s += " + ";
    }
    s += c.render(names);
  }
  return s;
}

// ---------------------------------------------------------------------------
// FactoredExpr

FactoredExpr::FactoredExpr(int n_vars, std::vector<Term> terms)
    : n_(n_vars), terms_(std::move(terms)) {
  check_var_count(n_vars);
  for (auto& t : terms_) {
    std::sort(t.xors.begin(), t.xors.end(), operand_less);
  }
}

FactoredExpr FactoredExpr::from_sop(const SopExpr& sop) {
  std::vector<Term> terms;
  for (const auto& c : sop.cubes()) {
    terms.push_back({c, {}});
  }
  return FactoredExpr(sop.n_vars(), std::move(terms));
}

FactoredExpr FactoredExpr::xor_of(int n_vars, std::vector<Cube> operands) {
  return FactoredExpr(n_vars, {Term{Cube(n_vars), std::move(operands)}});
}

bool FactoredExpr::evaluate(std::uint32_t row) const {
  for (const auto& t : terms_) {
    if (!t.factor.covers(row)) {
      continue;
    }
    if (t.xors.empty()) {
      return true;
    }
    bool parity = false;
    for (const auto& op : t.xors) {
      parity ^= op.covers(row);
    }
    if (parity) {
      return true;
    }
  }
  return false;
}

int FactoredExpr::literal_count() const {
  int total = 0;
  for (const auto& t : terms_) {
    total += t.factor.literal_count();
    for (const auto& op : t.xors) {
      total += op.literal_count();
    }
  }
  return total;
}

int FactoredExpr::two_input_gates() const {
  if (terms_.empty()) {
    return 0;
  }
  int gates = static_cast<int>(terms_.size()) - 1;  // ORs
  for (const auto& t : terms_) {
    const int k = t.factor.literal_count();
    if (t.xors.empty()) {
      gates += std::max(k - 1, 0);
      continue;
    }
    for (const auto& op : t.xors) {
      gates += std::max(op.literal_count() - 1, 0);
    }
    gates += static_cast<int>(t.xors.size()) - 1 + k;
  }
  return gates;
}

int FactoredExpr::inverters() const {
  std::set<int> negated;
  auto scan = [&](const Cube& c) {
    for (int var = 0; var < c.n_vars(); ++var) {
      if (c.literal(var) == Cube::Lit::Zero) {
        negated.insert(var);
      }
    }
  };
  for (const auto& t : terms_) {
    scan(t.factor);
    for (const auto& op : t.xors) {
      scan(op);
    }
  }
  return static_cast<int>(negated.size());
}

std::string FactoredExpr::render(std::span<const std::string> names) const {
  if (terms_.empty()) {
    return "0";
  }
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) {
      s += " + ";
    }
    if (t.xors.empty()) {
      s += t.factor.render(names);
      continue;
    }
    std::string x;
    for (const auto& op : t.xors) {
      if (!x.empty()) {
        x += " ^ ";
      }
      x += is_literal_cube(op) ? op.render(names) : "(" + op.render(names) + ")";
    }
    if (t.factor.literal_count() == 0) {
      s += terms_.size() == 1 ? x : "(" + x + ")";
    } else {
      s += t.factor.render(names) + " (" + x + ")";
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Minimization

std::vector<Cube> prime_implicants(const TruthTableSpec& spec) {
  const int n = spec.n_vars();
  std::set<Cube> current;
  for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
    if (spec.at(row) != Tri::Zero) {
      current.insert(Cube::minterm(n, row));
    }
  }

  std::set<Cube> primes;
  while (!current.empty()) {
    // Only cubes with equal care masks can merge.
    std::map<std::uint32_t, std::vector<Cube>> groups;
    for (const auto& c : current) {
      groups[c.care_mask()].push_back(c);
    }
    std::set<Cube> merged_into_next;
    std::set<Cube> used;
    for (const auto& [care, cubes] : groups) {
      for (std::size_t i = 0; i < cubes.size(); ++i) {
        for (std::size_t j = i + 1; j < cubes.size(); ++j) {
          if (Cube::adjacent(cubes[i], cubes[j])) {
            merged_into_next.insert(Cube::merge(cubes[i], cubes[j]));
            used.insert(cubes[i]);
            used.insert(cubes[j]);
          }
        }
      }
    }
    for (const auto& c : current) {
      if (!used.contains(c)) {
        primes.insert(c);
      }
    }
    current = std::move(merged_into_next);
  }

  std::vector<Cube> result;
  for (const auto& p : primes) {
    for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
      if (spec.at(row) == Tri::One && p.covers(row)) {
        result.push_back(p);
        break;
      }
    }
  }
  return result;
}

SopExpr minimize_exact(const TruthTableSpec& spec) {
  const auto primes = prime_implicants(spec);
  return SopExpr(spec.n_vars(), CoverSearch(primes, spec).run());
}

bool check_equiv(const SopExpr& expr, const TruthTableSpec& spec) {
  return check_equiv(FactoredExpr::from_sop(expr), spec);
}

bool check_equiv(const FactoredExpr& expr, const TruthTableSpec& spec) {
  if (expr.n_vars() != spec.n_vars()) {
    return false;
  }
  for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
    const Tri want = spec.at(row);
    if (want != Tri::DontCare && expr.evaluate(row) != (want == Tri::One)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// XOR recognition

namespace {

constexpr int kMaxEsopSearchVars = 6;

std::uint64_t truth_mask(const FactoredExpr& e) {
  std::uint64_t mask = 0;
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << e.n_vars()); ++row) {
    if (e.evaluate(row)) {
      mask |= std::uint64_t{1} << row;
    }
  }
  return mask;
}

std::uint64_t cube_mask(const Cube& c) {
  std::uint64_t mask = 0;
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << c.n_vars()); ++row) {
    if (c.covers(row)) {
      mask |= std::uint64_t{1} << row;
    }
  }
  return mask;
}

using EsopKey = std::tuple<int, int, int, std::vector<Cube>>;

EsopKey esop_key(const FactoredExpr& e) {
  return {e.two_input_gates(), e.inverters(), e.literal_count(), e.terms().front().xors};
}

/// Cheapest XOR of two or three non-constant cubes equal to `target`.
std::optional<FactoredExpr> search_esop(int n, std::uint64_t target) {
  std::vector<Cube> cubes;
  std::vector<std::uint64_t> masks;
  std::unordered_map<std::uint64_t, std::size_t> by_mask;
  std::uint32_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= 3;
  }
  for (std::uint32_t code = 0; code < total; ++code) {
    Cube c(n);
    std::uint32_t rest = code;
    for (int var = 0; var < n; ++var) {
      c = c.with(var, static_cast<Cube::Lit>(rest % 3));
      rest /= 3;
    }
    if (c.literal_count() == 0) {
      continue;
    }
    by_mask.emplace(cube_mask(c), cubes.size());
    masks.push_back(cube_mask(c));
    cubes.push_back(c);
  }

  std::optional<FactoredExpr> best;
  std::optional<EsopKey> best_key;
  auto consider = [&](std::vector<Cube> operands) {
    FactoredExpr e = FactoredExpr::xor_of(n, std::move(operands));
    auto key = esop_key(e);
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best = std::move(e);
    }
  };
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const auto pair = by_mask.find(target ^ masks[i]);
    if (pair != by_mask.end() && pair->second > i) {
      consider({cubes[i], cubes[pair->second]});
    }
    for (std::size_t j = i + 1; j < cubes.size(); ++j) {
      const auto third = by_mask.find(target ^ masks[i] ^ masks[j]);
      if (third != by_mask.end() && third->second > j) {
        consider({cubes[i], cubes[j], cubes[third->second]});
      }
    }
  }
  return best;
}

/// Pairs c a b' + c a' b (and c a b + c a' b') into c (a ^ b) / c (a ^ b').
FactoredExpr pair_factor(const SopExpr& sop) {
  const int n = sop.n_vars();
  std::vector<Cube> pool = sop.cubes();
  std::vector<FactoredExpr::Term> terms;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < pool.size() && !progress; ++i) {
      for (std::size_t j = i + 1; j < pool.size() && !progress; ++j) {
        const Cube& a = pool[i];
        const Cube& b = pool[j];
        if (a.care_mask() != b.care_mask() || std::popcount(a.value_mask() ^ b.value_mask()) != 2) {
          continue;
        }
        std::vector<int> vars;
        for (int var = 0; var < n; ++var) {
          if (a.literal(var) != b.literal(var)) {
            vars.push_back(var);
          }
        }
        Cube common = a.with(vars[0], Cube::Lit::Dash).with(vars[1], Cube::Lit::Dash);
        // a-literals a.v0 and a.v1; the other cube has both flipped.
        const Cube first = Cube(n).with(vars[0], Cube::Lit::One);
        const bool same_polarity = a.literal(vars[0]) == a.literal(vars[1]);
        const Cube second =
            Cube(n).with(vars[1], same_polarity ? Cube::Lit::Zero : Cube::Lit::One);
        terms.push_back({common, {first, second}});
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        progress = true;
      }
    }
  }
  for (const auto& c : pool) {
    terms.push_back({c, {}});
  }
  return FactoredExpr(n, std::move(terms));
}

}  // namespace

XorReport recognize_xor(const SopExpr& expr, std::span<const std::string> names) {
  const int n = expr.n_vars();
  const FactoredExpr plain = FactoredExpr::from_sop(expr);
  std::optional<FactoredExpr> chosen;

  if (expr.term_count() >= 2) {
    if (n <= kMaxEsopSearchVars) {
      if (auto esop = search_esop(n, truth_mask(plain));
          esop && esop->two_input_gates() < plain.two_input_gates()) {
        chosen = std::move(esop);
      }
    }
    if (!chosen) {
      if (auto paired = pair_factor(expr); paired.two_input_gates() < plain.two_input_gates()) {
        chosen = std::move(paired);
      }
    }
  }

  XorReport report{chosen ? *chosen : plain, {}, 0, chosen.has_value(), true};
  report.rendering = report.expr.render(names);
  report.two_input_gates = report.expr.two_input_gates();
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << n); ++row) {
    if (report.expr.evaluate(row) != expr.evaluate(row)) {
      report.equivalent = false;
      break;
    }
  }
  return report;
}

}  // namespace mvq
