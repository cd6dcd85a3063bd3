#include "cellrim/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace cellrim {

namespace {

constexpr std::array<StuOrder, 6> kOrders = {StuOrder::STU, StuOrder::SUT, StuOrder::TSU,
                                             StuOrder::TUS, StuOrder::UST, StuOrder::UTS};

std::array<int, 3> arrange(int s, int t, int u, StuOrder order) {
  switch (order) {
    case StuOrder::STU:
      return {s, t, u};
    case StuOrder::SUT:
      return {s, u, t};
    case StuOrder::TSU:
      return {t, s, u};
    case StuOrder::TUS:
      return {t, u, s};
    case StuOrder::UST:
      return {u, s, t};
    case StuOrder::UTS:
      break;
  }
  return {u, t, s};
}

// Subsets of {lo..hi} of the given size, lexicographic.
std::vector<std::vector<int>> subsets(int lo, int hi, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (int x = next; x <= hi; ++x) {
      if (hi - x + 1 < size - static_cast<int>(current.size())) break;
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<int> checked_set(std::vector<int> c, int lo, int hi, int size, const std::string& name) {
  std::sort(c.begin(), c.end());
  require(std::adjacent_find(c.begin(), c.end()) == c.end(), name + " has repeated entries");
  require(static_cast<int>(c.size()) == size, name + " must have " + std::to_string(size) + " elements");
  for (int x : c) {
    require(x >= lo && x <= hi, name + " must lie in {" + std::to_string(lo) + ".." + std::to_string(hi) + "}");
  }
  return c;
}

bool in(const std::vector<int>& c, int x) { return std::binary_search(c.begin(), c.end(), x); }

}  // namespace

std::string to_string(StuOrder order) {
  const auto a = arrange('s', 't', 'u', order);
  return std::string{'(', static_cast<char>(a[0]), ',', static_cast<char>(a[1]), ',',
                     static_cast<char>(a[2]), ')'};
}

StuOrder parse_stu_order(const std::string& text) {
  std::string letters;
  for (char ch : text) {
    if (std::isalpha(static_cast<unsigned char>(ch))) letters += static_cast<char>(std::tolower(ch));
  }
  for (auto order : kOrders) {
    const auto a = arrange('s', 't', 'u', order);
    if (letters == std::string{static_cast<char>(a[0]), static_cast<char>(a[1]), static_cast<char>(a[2])}) {
      return order;
    }
  }
  throw std::invalid_argument("order must be a permutation of s,t,u: " + text);
}

StuShape::StuShape(int s_, int t_, int u_, StuOrder order_, int trailing_ones_)
    : s(s_), t(t_), u(u_), order(order_), trailing_ones(trailing_ones_) {
  require(s >= t && t >= u && u >= 1, "need s >= t >= u >= 1");
  require(trailing_ones >= 1, "need at least one trailing part 1");
}

std::array<int, 3> StuShape::lambda_tilde() const { return arrange(s, t, u, order); }

Composition StuShape::lambda() const {
  const auto a = lambda_tilde();
  std::vector<int> parts(a.begin(), a.end());
  parts.insert(parts.end(), static_cast<std::size_t>(trailing_ones), 1);
  return Composition(std::move(parts));
}

std::string StuShape::to_string() const {
  return "s=" + std::to_string(s) + " t=" + std::to_string(t) + " u=" + std::to_string(u) +
         " order=" + cellrim::to_string(order) + " lambda=" + lambda().to_string();
}

std::optional<StuShape> StuShape::from_composition(const Composition& lambda) {
  if (lambda.num_parts() < 4) return std::nullopt;
  for (std::size_t i = 3; i < lambda.num_parts(); ++i) {
    if (lambda[i] != 1) return std::nullopt;
  }
  std::array<int, 3> stu = {lambda[0], lambda[1], lambda[2]};
  std::sort(stu.begin(), stu.end(), std::greater<>());
  const std::array<int, 3> tilde = {lambda[0], lambda[1], lambda[2]};
  for (auto order : kOrders) {
    if (arrange(stu[0], stu[1], stu[2], order) == tilde) {
      return StuShape(stu[0], stu[1], stu[2], order, static_cast<int>(lambda.num_parts()) - 3);
    }
  }
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Young:
      return "young";
    case Family::F:
      return "F";
    case Family::G:
      return "G";
    case Family::H:
      return "H";
    case Family::M:
      return "M";
    case Family::N:
      break;
  }
  return "N";
}

Family family_of(const StuShape& shape) {
  const auto a = shape.lambda_tilde();
  const int l1 = a[0];
  const int l2 = a[1];
  const int l3 = a[2];
  if (l1 >= l2 && l2 >= l3) return Family::Young;
  if (l1 >= l3 && l3 > l2) return Family::F;
  if (l2 > l1 && l1 >= l3) return Family::G;
  if (l3 > l1 && l1 >= l2) return Family::H;
  return l2 >= l3 ? Family::M : Family::N;
}

std::string FamilyParams::to_string() const {
  std::string c = "{";
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (i) c += ',';
    c += std::to_string(C[i]);
  }
  c += "}";
  switch (variant) {
    case Family::Young:
      return "young";
    case Family::F:
    case Family::G:
      return cellrim::to_string(variant) + " C=" + c;
    case Family::H:
      return "H v=" + std::to_string(v) + " C~=" + c;
    case Family::M:
      return "M (eps,eta,theta,zeta,psi)=(" + std::to_string(epsilon) + "," + std::to_string(eta) + "," +
             std::to_string(theta) + "," + std::to_string(zeta) + "," + std::to_string(psi) + ") C=" + c;
    case Family::N:
      break;
  }
  return "N (eta,eps,theta,phi,zeta)=(" + std::to_string(eta) + "," + std::to_string(epsilon) + "," +
         std::to_string(theta) + "," + std::to_string(phi) + "," + std::to_string(zeta) + ")";
}

Diagram family_diagram(const FamilyParams& p, const StuShape& shape) {
  require(shape.trailing_ones == 1, "family diagrams have exactly four rows");
  const int s = shape.s;
  const int t = shape.t;
  const int u = shape.u;
  const auto tilde = shape.lambda_tilde();
  std::vector<Node> nodes;
  auto add_row = [&](int row, auto&& predicate, int last) {
    for (int i = 1; i <= last; ++i) {
      if (predicate(i)) nodes.push_back({row, i});
    }
  };
  switch (p.variant) {
    case Family::Young: {
      require(tilde == std::array<int, 3>{s, t, u}, "Young member needs lambda~ = (s,t,u)");
      return young_diagram(shape.lambda());
    }
    case Family::F: {
      require(tilde == std::array<int, 3>{s, u, t}, "F_C needs lambda~ = (s,u,t)");
      const auto C = checked_set(p.C, 1, t, u, "C");
      add_row(1, [](int) { return true; }, s);
      add_row(2, [&](int i) { return in(C, i); }, t);
      add_row(3, [](int) { return true; }, t);
      nodes.push_back({4, C.front()});
      break;
    }
    case Family::G: {
      require(tilde == std::array<int, 3>{t, s, u}, "G_C needs lambda~ = (t,s,u)");
      const int top = s - t + u;
      const auto C = checked_set(p.C, 1, top, u, "C");
      add_row(1, [&](int i) { return in(C, i) || i > top; }, s);
      add_row(2, [](int) { return true; }, s);
      add_row(3, [&](int i) { return in(C, i); }, s);
      nodes.push_back({4, C.front()});
      break;
    }
    case Family::H: {
      require(tilde == std::array<int, 3>{t, u, s}, "H_C needs lambda~ = (t,u,s)");
      const auto Ct = checked_set(p.C, s - t + 2, s, u - 1, "C~");
      const int v_max = Ct.empty() ? s : Ct.front() - 1;
      require(p.v >= 1 && p.v <= v_max, "v must lie in {1.." + std::to_string(v_max) + "}");
      const int v_tilde = p.v < s - t + 1 ? p.v : s - t + 1;
      add_row(1, [&](int i) { return i == v_tilde || i >= s - t + 2; }, s);
      add_row(2, [&](int i) { return i == p.v || in(Ct, i); }, s);
      add_row(3, [](int) { return true; }, s);
      nodes.push_back({4, p.v});
      break;
    }
    case Family::M: {
      require(tilde == std::array<int, 3>{u, s, t} && t > u, "M needs lambda~ = (u,s,t) with t > u");
      const int e = p.epsilon;
      const int h = p.eta;
      const int th = p.theta;
      const int z = p.zeta;
      const int ps = p.psi;
      require(e >= 0 && h >= 0 && th >= 0 && z >= 0 && ps >= 0, "M parameters must be non-negative");
      require(s == e + h + 1 + z + ps, "M needs s = eps+eta+1+zeta+psi");
      require(t == e + th + z + u, "M needs t = eps+theta+zeta+u");
      require(ps >= u - 1, "M needs psi >= u-1");
      require(h >= th, "M needs eta >= theta");
      const auto C = checked_set(p.C, s + th - ps + 1, s + th, u - 1, "C");
      const int pivot = e + h + 1;
      const int last = s + th;
      add_row(1, [&](int i) { return i == pivot || in(C, i); }, last);
      add_row(2, [&](int i) { return i <= pivot || (i >= e + h + th + 2 && i <= last); }, last);
      add_row(3, [&](int i) { return i <= e || (i >= pivot && i <= e + h + th + z + 1) || in(C, i); }, last);
      nodes.push_back({4, pivot});
      break;
    }
    case Family::N: {
      require(tilde == std::array<int, 3>{u, t, s} && t > u, "N needs lambda~ = (u,t,s) with t > u");
      const int h = p.eta;
      const int e = p.epsilon;
      const int th = p.theta;
      const int f = p.phi;
      const int z = p.zeta;
      require(e >= 0 && h >= 0 && th >= 0 && z >= 0 && f >= 0, "N parameters must be non-negative");
      require(s == h + e + f + z + u, "N needs s = eta+eps+phi+zeta+u");
      require(t == e + th + z + u, "N needs t = eps+theta+zeta+u");
      require(f >= th, "N needs phi >= theta");
      const int pivot = h + e + th + 1;
      const int last = s + th;
      add_row(1, [&](int i) { return i == pivot || i >= last - u + 2; }, last);
      add_row(2, [&](int i) { return (i >= h + 1 && i <= pivot) || i >= last - u - z + 2; }, last);
      add_row(3, [&](int i) { return i <= h + e || i >= pivot; }, last);
      nodes.push_back({4, pivot});
      break;
    }
  }
  Diagram D(std::move(nodes));
  require(row_composition(D) == shape.lambda(), "family member has the wrong row lengths");
  return D;
}

std::vector<FamilyParams> family_parameters(const StuShape& shape) {
  const int s = shape.s;
  const int t = shape.t;
  const int u = shape.u;
  std::vector<FamilyParams> out;
  const Family fam = family_of(shape);
  switch (fam) {
    case Family::Young:
      out.push_back({});
      break;
    case Family::F:
      for (auto& C : subsets(1, t, u)) out.push_back({Family::F, C});
      break;
    case Family::G:
      for (auto& C : subsets(1, s - t + u, u)) out.push_back({Family::G, C});
      break;
    case Family::H:
      for (auto& Ct : subsets(s - t + 2, s, u - 1)) {
        const int v_max = Ct.empty() ? s : Ct.front() - 1;
        for (int v = 1; v <= v_max; ++v) {
          FamilyParams p{Family::H, Ct};
          p.v = v;
          out.push_back(p);
        }
      }
      break;
    case Family::M:
      for (int theta = 0; theta <= t - u; ++theta) {
        for (int zeta = 0; zeta <= t - u - theta; ++zeta) {
          const int epsilon = t - u - theta - zeta;
          for (int eta = theta; eta <= s; ++eta) {
            if (eta > theta && zeta != 0) continue;
            const int psi = s - epsilon - eta - 1 - zeta;
            if (psi < u - 1) continue;
            for (auto& C : subsets(s + theta - psi + 1, s + theta, u - 1)) {
              FamilyParams p{Family::M, C};
              p.epsilon = epsilon;
              p.eta = eta;
              p.theta = theta;
              p.zeta = zeta;
              p.psi = psi;
              out.push_back(p);
            }
          }
        }
      }
      break;
    case Family::N:
      for (int theta = 0; theta <= t - u; ++theta) {
        for (int phi = theta; phi <= s; ++phi) {
          for (int epsilon = 0; epsilon <= t - u - theta; ++epsilon) {
            if (phi > theta && epsilon != 0) continue;
            const int zeta = t - u - epsilon - theta;
            const int eta = s - epsilon - phi - zeta - u;
            if (eta < 0) continue;
            FamilyParams p;
            p.variant = Family::N;
            p.eta = eta;
            p.epsilon = epsilon;
            p.theta = theta;
            p.phi = phi;
            p.zeta = zeta;
            out.push_back(p);
          }
        }
      }
      break;
  }
  return out;
}

bool params_special(const FamilyParams& p) {
  return (p.variant != Family::M && p.variant != Family::N) || p.theta == 0;
}

long long binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TableCounts table_counts(const StuShape& shape) {
  const long long s = shape.s;
  const long long t = shape.t;
  const long long u = shape.u;
  switch (shape.order) {
    case StuOrder::STU:
      return {1, 0};
    case StuOrder::SUT:
      return {binomial(t, u), 0};
    case StuOrder::TSU:
      return {binomial(s - t + u, u), 0};
    case StuOrder::TUS:
      return {(s - t) * binomial(t - 1, u - 1) + binomial(t, u), 0};
    case StuOrder::UST:
      return {(t - u) * binomial(s - t + u - 1, u - 1) + binomial(s - t + u, u),
              binomial(t - u, 2) * binomial(s - t + u - 1, u - 1) + (t - u) * binomial(s - t + u, u)};
    case StuOrder::UTS:
      break;
  }
  return {s - u + 1, (t - u) * (s - t) + binomial(t - u + 1, 2)};
}

std::string DeterminingTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    switch (entries[i]) {
      case TupleSymbol::One:
        s += "1";
        break;
      case TupleSymbol::OneBar:
        s += "1̄";
        break;
      case TupleSymbol::Two:
        s += "2";
        break;
      case TupleSymbol::Three:
        s += "3";
        break;
      case TupleSymbol::Four:
        s += "4";
        break;
    }
  }
  return s + ")";
}

DeterminingTuple DeterminingTuple::parse(const std::string& text) {
  DeterminingTuple out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "1") {
      out.entries.push_back(TupleSymbol::One);
    } else if (token == "1b" || token == "1bar" || token == "1̄" || token == "b") {
      out.entries.push_back(TupleSymbol::OneBar);
    } else if (token == "2") {
      out.entries.push_back(TupleSymbol::Two);
    } else if (token == "3") {
      out.entries.push_back(TupleSymbol::Three);
    } else if (token == "4") {
      out.entries.push_back(TupleSymbol::Four);
    } else {
      throw std::invalid_argument("unknown tuple symbol: " + token);
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return out;
}

namespace {

std::optional<DeterminingTuple> read_tuple(const Diagram& D, const StuShape& shape) {
  if (shape.trailing_ones != 1 || !(shape.t > shape.u) || shape.lambda_tilde()[0] != shape.u) {
    return std::nullopt;
  }
  if (row_composition(D) != shape.lambda()) return std::nullopt;
  DeterminingTuple tuple;
  int fours = 0;
  int threes = 0;
  for (int j = 1; j <= D.num_cols(); ++j) {
    const auto rows = D.column(j);
    if (rows == std::vector<int>{1, 2, 3, 4}) {
      if (threes > 0) return std::nullopt;
      ++fours;
      tuple.entries.push_back(TupleSymbol::Four);
    } else if (rows == std::vector<int>{1, 2, 3}) {
      ++threes;
      tuple.entries.push_back(TupleSymbol::Three);
    } else if (rows == std::vector<int>{2, 3}) {
      tuple.entries.push_back(TupleSymbol::Two);
    } else if (rows == std::vector<int>{2}) {
      tuple.entries.push_back(TupleSymbol::One);
    } else if (rows == std::vector<int>{3}) {
      tuple.entries.push_back(TupleSymbol::OneBar);
    } else {
      return std::nullopt;
    }
  }
  if (fours != 1 || threes != shape.u - 1) return std::nullopt;
  return tuple;
}

}  // namespace

bool satisfies_hypothesis_dagger(const Diagram& D, const StuShape& shape) {
  return read_tuple(D, shape).has_value();
}

DeterminingTuple determining_tuple(const Diagram& D, const StuShape& shape) {
  auto tuple = read_tuple(D, shape);
  if (!tuple) throw std::invalid_argument("diagram has no determining tuple: " + D.to_string());
  return *tuple;
}

Diagram tuple_to_diagram(const DeterminingTuple& tuple) {
  std::vector<Node> nodes;
  for (std::size_t k = 0; k < tuple.entries.size(); ++k) {
    const int j = static_cast<int>(k) + 1;
    switch (tuple.entries[k]) {
      case TupleSymbol::One:
        nodes.push_back({2, j});
        break;
      case TupleSymbol::OneBar:
        nodes.push_back({3, j});
        break;
      case TupleSymbol::Two:
        nodes.insert(nodes.end(), {{2, j}, {3, j}});
        break;
      case TupleSymbol::Three:
        nodes.insert(nodes.end(), {{1, j}, {2, j}, {3, j}});
        break;
      case TupleSymbol::Four:
        nodes.insert(nodes.end(), {{1, j}, {2, j}, {3, j}, {4, j}});
        break;
    }
  }
  return Diagram(std::move(nodes));
}

std::string to_string(ColumnOp op) { return "C" + std::to_string(static_cast<int>(op) + 1); }

ColumnOp parse_column_op(const std::string& text) {
  static const std::array<ColumnOp, 5> ops = {ColumnOp::C1, ColumnOp::C2, ColumnOp::C3, ColumnOp::C4,
                                              ColumnOp::C5};
  for (auto op : ops) {
    if (text == to_string(op)) return op;
  }
  throw std::invalid_argument("unknown column operation: " + text);
}

Diagram apply_column_op(const Diagram& E, ColumnOp op, int j, const StuShape& shape) {
  auto tuple = determining_tuple(E, shape);
  auto& a = tuple.entries;
  const auto m = static_cast<int>(a.size());
  using T = TupleSymbol;
  if (op == ColumnOp::C5) {
    require(j >= 1 && j <= m && a[static_cast<std::size_t>(j - 1)] == T::Two,
            "C5 needs a column of length 2 at " + std::to_string(j));
    a[static_cast<std::size_t>(j - 1)] = T::OneBar;
    a.insert(a.begin() + j, T::One);
    return tuple_to_diagram(tuple);
  }
  require(j >= 1 && j < m, "column index out of range: " + std::to_string(j));
  const auto x = a[static_cast<std::size_t>(j - 1)];
  const auto y = a[static_cast<std::size_t>(j)];
  bool ok = false;
  switch (op) {
    case ColumnOp::C1:
      ok = x == T::One && y == T::Two;
      break;
    case ColumnOp::C2:
      ok = x == T::Three && y == T::Two;
      break;
    case ColumnOp::C3:
      ok = x == T::Two && y == T::OneBar;
      break;
    case ColumnOp::C4:
      ok = x == T::Three && y == T::OneBar;
      break;
    case ColumnOp::C5:
      break;
  }
  require(ok, to_string(op) + " pattern does not match at column " + std::to_string(j));
  std::swap(a[static_cast<std::size_t>(j - 1)], a[static_cast<std::size_t>(j)]);
  return tuple_to_diagram(tuple);
}

}  // namespace cellrim
