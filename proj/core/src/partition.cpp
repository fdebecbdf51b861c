#include "qsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qsym/error.hpp"

namespace qsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw BadIndices("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // parts chosen in decreasing order, largest first gives reverse lex
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    long long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[i - g1];
      if (g2 <= i) s += sign * p[i - g2];
    }
    p[i] = s;
  }
  return p[n];
}

long long z_classical(const Partition& p) {
  long long z = 1;
  const auto& v = p.parts();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    long long m = static_cast<long long>(j - i);
    for (long long t = 0; t < m; ++t) z *= v[i];
    for (long long t = 2; t <= m; ++t) z *= t;
    i = j;
  }
  return z;
}

int epsilon(const Partition& p) { return ((p.size() - p.length()) % 2 == 0) ? 1 : -1; }

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  if (p.empty()) return Partition();
  int first = p.parts().front();
  for (int i = 1; i <= first; ++i) {
    int cnt = 0;
    for (int x : p.parts())
      if (x >= i) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

int n_stat(const Partition& p) {
  int s = 0;
  for (int i = 0; i < p.length(); ++i) s += i * p.parts()[i];
  return s;
}

int n_stat_comp(const Composition& u) {
  int s = 0;
  for (int i = 0; i < u.length(); ++i) s += i * u.parts()[i];
  return s;
}

std::vector<Composition> distinct_permutations(const Partition& p) {
  std::vector<Composition> out;
  std::vector<int> w = p.parts();  // already in decreasing order
  if (w.empty()) {
    out.emplace_back();
    return out;
  }
  do {
    out.emplace_back(w);
  } while (std::prev_permutation(w.begin(), w.end()));
  return out;
}

QScalar q_z(const Partition& p, BaseExponent m) {
  if (p.empty()) throw EmptyPartition("q_z needs a nonempty partition");
  int n = p.size();
  std::vector<QScalar> inv_int(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) inv_int[k] = qint(k, m).inverse();
  QScalar sum;
  for (const auto& u : distinct_permutations(p)) {
    QScalar term(1);
    int rest = n;
    for (int part : u.parts()) {
      term *= inv_int[rest];
      rest -= part;
    }
    sum += term;
  }
  return sum.inverse();
}

QScalar q_z_h(const Partition& p, BaseExponent m) {
  if (p.empty()) throw EmptyPartition("q_z_h needs a nonempty partition");
  return psi_power(m, p.size() - p.length()) * q_z(p, m.inverse());
}

std::string to_text(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os.str();
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + tok + "'");
    }
    if (pos != tok.size() || v < 1) throw ParseError("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace qsym
