#include "qsym/oracle.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <thread>

#include "qsym/error.hpp"
#include "qsym/json_io.hpp"
#include "qsym/qcalculus.hpp"

namespace qsym {

Perm::Perm(std::vector<int> word) : w_(std::move(word)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int a : w_) {
    if (a < 1 || a > static_cast<int>(w_.size()) || seen[a]) throw std::invalid_argument("not a permutation");
    seen[a] = 1;
  }
}

bool Perm::is_basic() const { return !w_.empty() && w_.front() == size(); }

int inv(const Perm& p) {
  const auto& w = p.word();
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

int noninv(const Perm& p) {
  const auto& w = p.word();
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] < w[j]) ++c;
  return c;
}

std::vector<std::vector<int>> basic_decomposition(const Perm& p) {
  std::vector<std::vector<int>> blocks;
  int best = 0;
  for (int a : p.word()) {
    if (a > best) {
      best = a;
      blocks.emplace_back();
    }
    blocks.back().push_back(a);
  }
  return blocks;
}

std::string weight_name(Weight w) { return w == Weight::Unit ? "unit" : "block-marker"; }

PermSums perm_sums(int n, Weight w) {
  if (n < 0 || n > 9) throw TooLarge("permutation enumeration limited to n <= 9");
  PermSums s;
  s.n = n;
  int maxinv = n * (n - 1) / 2;
  // counts[blocks][inversions]
  std::vector<std::vector<long long>> g(n + 1, std::vector<long long>(maxinv + 1, 0));
  std::vector<std::vector<long long>> gb = g;
  std::vector<long long> fb(maxinv + 1, 0), fbb(maxinv + 1, 0);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    Perm p(word);
    int I = inv(p), Ib = maxinv - I;
    int blocks = static_cast<int>(basic_decomposition(p).size());
    ++s.perms;
    ++g[blocks][I];
    ++gb[blocks][Ib];
    if (p.is_basic()) {
      ++s.basics;
      ++fb[I];
      ++fbb[Ib];
    }
  } while (std::next_permutation(word.begin(), word.end()));

  auto qpoly = [](const std::vector<long long>& c) {
    std::vector<Rational> r;
    for (long long v : c) r.emplace_back(static_cast<long>(v));
    return QScalar(Poly(std::move(r)));
  };
  auto collect = [&](const std::vector<std::vector<long long>>& t) {
    RealXPoly r;
    for (int b = 0; b <= n; ++b) {
      QScalar c = qpoly(t[b]);
      r += w == Weight::Unit ? RealXPoly(c) : RealXPoly::monomial(c, b);
    }
    return r;
  };
  s.gamma = collect(g);
  s.gamma_bar = collect(gb);
  if (n == 0) {
    s.gamma = s.gamma_bar = RealXPoly(1);
    s.perms = 1;
  }
  RealXPoly mark = w == Weight::Unit ? RealXPoly(1) : RealXPoly::x();
  s.f = n == 0 ? RealXPoly() : mark * RealXPoly(qpoly(fb));
  s.f_bar = n == 0 ? RealXPoly() : mark * RealXPoly(qpoly(fbb));
  return s;
}

namespace {

bool verify_formula(int n_max, Weight w, bool star) {
  Series<RealXPoly> G(n_max), F(n_max);
  for (int n = 0; n <= n_max; ++n) {
    PermSums s = perm_sums(n, w);
    QScalar inv_fact = qfact(n).inverse();
    G.set(n, (star ? s.gamma_bar : s.gamma) * inv_fact);
    F.set(n, (star ? s.f_bar : s.f) * inv_fact);
  }
  return star ? star_exp(F) == G : gessel_exp(F) == G;
}

}  // namespace

bool verify_gessel_formula(int n_max, Weight w) { return verify_formula(n_max, w, false); }
bool verify_star_formula(int n_max, Weight w) { return verify_formula(n_max, w, true); }

QScalar subset_noninv_sum(int n, int k) {
  if (n < 0 || n > 20) throw TooLarge("subset enumeration limited to n <= 20");
  std::vector<long> c(static_cast<std::size_t>(k) * (n - k) + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    int cnt = 0, outside_above = 0;
    // scan from the top: each v in V pairs with the non-members above it
    for (int v = n - 1; v >= 0; --v) {
      if (mask & (1u << v)) cnt += outside_above;
      else ++outside_above;
    }
    ++c[cnt];
  }
  std::vector<Rational> r(c.begin(), c.end());
  return QScalar(Poly(std::move(r)));
}

LabeledTree tree_from_pruefer(const std::vector<int>& code, int n) {
  LabeledTree t;
  t.n = n;
  t.parent.assign(static_cast<std::size_t>(n) + 1, 0);
  if (n <= 1) return t;
  if (static_cast<int>(code.size()) != n - 2) throw std::invalid_argument("Pruefer code has wrong length");
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<int> degree(n + 1, 1);
  for (int a : code) ++degree[a];
  for (int a : code) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    adj[leaf].push_back(a);
    adj[a].push_back(leaf);
    --degree[leaf];
    --degree[a];
  }
  int u = 0, v = 0;
  for (int i = 1; i <= n; ++i)
    if (degree[i] == 1) (u ? v : u) = i;
  adj[u].push_back(v);
  adj[v].push_back(u);
  // orient toward the root 1
  std::vector<int> stack = {1};
  std::vector<char> seen(n + 1, 0);
  seen[1] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        t.parent[b] = a;
        stack.push_back(b);
      }
  }
  return t;
}

int tree_inversions(const LabeledTree& t) {
  int c = 0;
  for (int j = 2; j <= t.n; ++j)
    for (int a = t.parent[j]; a > 1; a = t.parent[a])
      if (a > j) ++c;
  return c;
}

long long tree_count(int n) {
  if (n <= 2) return 1;
  long long c = 1;
  for (int i = 0; i < n - 2; ++i) c *= n;
  return c;
}

QScalar OracleCache::get(const std::string& kind, int n, const std::function<QScalar()>& compute) const {
  if (!enabled()) return compute();
  std::filesystem::path file = dir_ / (kind + "_" + std::to_string(n) + ".json");
  if (std::ifstream in(file); in) {
    try {
      json j = json::parse(in);
      if (j.at("kind") == kind && j.at("n") == n) return from_json<QScalar>(j.at("poly"));
    } catch (const std::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  QScalar v = compute();
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  json j;
  j["kind"] = kind;
  j["n"] = n;
  j["poly"] = to_json(v);
  std::ofstream(file) << j.dump() << "\n";
  return v;
}

QScalar J_poly(int n, const OracleCache& cache, unsigned threads) {
  if (n < 1) throw BadIndices("J_n needs n >= 1");
  if (n > 8) throw TooLarge("tree enumeration limited to n <= 8");
  return cache.get("J", n, [n, threads] {
    const long long total = tree_count(n);
    const int maxinv = (n - 1) * (n - 2) / 2;
    unsigned th = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    th = static_cast<unsigned>(std::min<long long>(th, std::max<long long>(1, total / 4096)));
    std::vector<std::vector<long long>> part(th, std::vector<long long>(maxinv + 1, 0));
    auto work = [&](unsigned id) {
      long long lo = total * id / th, hi = total * (id + 1) / th;
      std::vector<int> code(static_cast<std::size_t>(std::max(0, n - 2)));
      for (long long r = lo; r < hi; ++r) {
        long long x = r;
        for (auto& d : code) {
          d = static_cast<int>(x % n) + 1;
          x /= n;
        }
        ++part[id][tree_inversions(tree_from_pruefer(code, n))];
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < th; ++i) pool.emplace_back(work, i);
    work(0);
    for (auto& t : pool) t.join();
    std::vector<Rational> c(maxinv + 1, 0);
    for (const auto& p : part)
      for (int i = 0; i <= maxinv; ++i) c[i] += static_cast<long>(p[i]);
    return QScalar(Poly(std::move(c)));
  });
}

QScalar tree_reciprocal(const QScalar& p, int n) {
  int d = (n - 1) * (n - 2) / 2;
  if (!p.is_polynomial() || p.num().degree() > d) throw BadIndices("not a tree enumerator of this size");
  return QScalar(p.num().reversed(d));
}

QScalar J_reciprocal(int n, const OracleCache& cache) { return tree_reciprocal(J_poly(n, cache), n); }

SymPoly classical_newton_p(int n) {
  if (n < 1) throw BadIndices("p_n needs n >= 1");
  std::vector<SymPoly> p(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    SymPoly s = SymPoly::e(j) * QScalar(static_cast<long>(j));
    if (j % 2 == 0) s = -s;
    for (int k = 1; k < j; ++k) {
      SymPoly t = SymPoly::e(k) * p[j - k];
      if (k % 2 == 1) s += t;
      else s -= t;
    }
    p[j] = std::move(s);
  }
  return p[n];
}

}  // namespace qsym
