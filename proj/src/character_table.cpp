#include "artin/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin {

namespace {

using u64 = std::uint64_t;
using Mat = std::vector<std::vector<u64>>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 of(long long v) const {
    long long m = static_cast<long long>(p);
    long long r = v % m;
    return static_cast<u64>(r < 0 ? r + m : r);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 choose_prime(u64 e, u64 order) {
  for (u64 p = e + 1;; p += e)
    if (p * p > 4 * order && is_prime(p)) return p;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> qs;
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    qs.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) qs.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : qs)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p = 2
}

// Rows in reduced echelon form; zero rows dropped.
struct Echelon {
  Mat rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(Mat a, const Fp& f) {
  Echelon out;
  if (a.empty()) return out;
  std::size_t cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    u64 iv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 t = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(t, a[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

// Basis of {x : a x = 0} for square a.
Mat nullspace(const Mat& a, const Fp& f) {
  std::size_t n = a.size();
  Echelon e = rref(a, f);
  std::vector<int> is_piv(n, -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) is_piv[e.pivots[i]] = static_cast<int>(i);
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free] >= 0) continue;
    std::vector<u64> x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.sub(0, e.rows[i][free]);
    out.push_back(std::move(x));
  }
  return out;
}

// Characteristic polynomial via Hessenberg form, low degree first.
std::vector<u64> charpoly(Mat h, const Fp& f) {
  std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 tinv = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      u64 u = f.mul(h[i][m - 1], tinv);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) p[m-1]
    std::vector<u64> q(m + 1, 0);
    for (std::size_t j = 0; j < p[m - 1].size(); ++j) {
      q[j + 1] = f.add(q[j + 1], p[m - 1][j]);
      q[j] = f.sub(q[j], f.mul(h[m - 1][m - 1], p[m - 1][j]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      u64 c = f.mul(t, h[m - i - 1][m - 1]);
      if (!c) continue;
      for (std::size_t j = 0; j < p[m - i - 1].size(); ++j) q[j] = f.sub(q[j], f.mul(c, p[m - i - 1][j]));
    }
    p[m] = std::move(q);
  }
  return p[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, const Fp& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t j = poly.size(); j-- > 0;) v = f.add(f.mul(v, x), poly[j]);
    if (v == 0) out.push_back(x);
    if (out.size() + 1 >= poly.size()) break;
  }
  return out;
}

class Splitter {
 public:
  Splitter(const PermGroup& g, const Fp& f) : g_(g), f_(f), k_(g.num_classes()), mats_(k_) {}

  // (M_j)[i][l] = #{x in C_j : x^-1 z_l in C_i}, z_l the representative of C_l.
  const Mat& class_matrix(std::size_t j) {
    if (!mats_[j].empty()) return mats_[j];
    Mat m(k_, std::vector<u64>(k_, 0));
    const auto& cls = g_.classes();
    for (std::size_t l = 0; l < k_; ++l) {
      int z = cls[l].rep;
      for (int x : cls[j].members) ++m[static_cast<std::size_t>(g_.class_of(g_.mul(g_.inv(x), z)))][l];
    }
    for (auto& row : m)
      for (auto& x : row) x %= f_.p;
    mats_[j] = std::move(m);
    return mats_[j];
  }

  // Splits an invariant subspace (echelon basis) by the action of m; returns the pieces.
  std::vector<Echelon> split(const Echelon& w, const Mat& m) const {
    std::size_t d = w.rows.size();
    Mat a(d, std::vector<u64>(d, 0));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        u64 acc = 0;
        const auto& row = m[w.pivots[s]];
        for (std::size_t l = 0; l < k_; ++l)
          if (w.rows[r][l]) acc = f_.add(acc, f_.mul(row[l], w.rows[r][l]));
        a[s][r] = acc;
      }
    auto rs = roots(charpoly(a, f_), f_);
    if (rs.size() <= 1) return {w};
    std::vector<Echelon> out;
    std::size_t total = 0;
    for (u64 lam : rs) {
      Mat b = a;
      for (std::size_t i = 0; i < d; ++i) b[i][i] = f_.sub(b[i][i], lam);
      Mat ns = nullspace(b, f_);
      Mat vecs;
      for (const auto& c : ns) {
        std::vector<u64> v(k_, 0);
        for (std::size_t s = 0; s < d; ++s)
          if (c[s])
            for (std::size_t l = 0; l < k_; ++l) v[l] = f_.add(v[l], f_.mul(c[s], w.rows[s][l]));
        vecs.push_back(std::move(v));
      }
      total += vecs.size();
      out.push_back(rref(std::move(vecs), f_));
    }
    if (total != d) throw std::logic_error("class matrix action is not diagonalizable mod p");
    return out;
  }

 private:
  const PermGroup& g_;
  const Fp& f_;
  std::size_t k_;
  std::vector<Mat> mats_;

 public:
  bool have(std::size_t j) const { return !mats_[j].empty(); }
};

}  // namespace

CharacterTable character_table(const GroupPtr& gp, std::uint64_t seed) {
  const PermGroup& g = *gp;
  std::size_t k = g.num_classes();
  u64 n = g.size();
  u64 e = g.exponent();
  CharacterTable t;
  t.group = gp;
  Fp f{choose_prime(e, n)};
  t.prime = f.p;
  const auto& cls = g.classes();

  // Common eigenvectors of the class matrices.
  Splitter sp(g, f);
  std::vector<Echelon> open, done;
  {
    Echelon all;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<u64> row(k, 0);
      row[i] = 1;
      all.rows.push_back(std::move(row));
      all.pivots.push_back(i);
    }
    if (k == 1)
      done.push_back(all);
    else
      open.push_back(all);
  }
  std::mt19937_64 rng(seed);
  auto refine = [&](const Mat& m) {
    std::vector<Echelon> next;
    for (const auto& w : open)
      for (auto& piece : sp.split(w, m)) (piece.rows.size() == 1 ? done : next).push_back(std::move(piece));
    open = std::move(next);
  };
  std::vector<std::size_t> used;
  for (std::size_t j = 1; j < k && !open.empty(); ++j) {
    refine(sp.class_matrix(j));
    used.push_back(j);
    if (open.empty() || used.size() < 2) continue;
    // random combination of the class matrices seen so far
    Mat comb(k, std::vector<u64>(k, 0));
    for (std::size_t u : used) {
      u64 r = rng() % f.p;
      const Mat& m = sp.class_matrix(u);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) comb[a][b] = f.add(comb[a][b], f.mul(r, m[a][b]));
    }
    refine(comb);
  }
  if (!open.empty() || done.size() != k) throw std::logic_error("class algebra did not split into characters");

  u64 z = f.pow(primitive_root(f), (f.p - 1) / e);
  std::vector<std::pair<std::vector<BigRational>, ClassFunction>> rows;
  for (auto& w : done) {
    std::vector<u64> om = w.rows[0];
    if (om[0] == 0) throw std::logic_error("central character vanishes at the identity");
    u64 iv = f.inv(om[0]);
    for (auto& x : om) x = f.mul(x, iv);
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = f.add(s, f.mul(f.mul(om[i], om[static_cast<std::size_t>(g.inverse_class(static_cast<int>(i)))]),
                         f.inv(cls[i].size % f.p)));
    if (s == 0) throw std::logic_error("degree equation is degenerate mod p");
    u64 d2 = f.mul(n % f.p, f.inv(s));
    u64 deg = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (f.mul(d, d) == d2) {
        deg = d;
        break;
      }
    if (!deg) throw std::logic_error("no admissible character degree");
    std::vector<u64> chi(k);
    for (std::size_t i = 0; i < k; ++i) chi[i] = f.mul(f.mul(om[i], deg), f.inv(cls[i].size % f.p));

    std::vector<Cyclotomic> vals(k);
    for (std::size_t i = 0; i < k; ++i) {
      u64 o = cls[i].element_order;
      u64 zo = f.pow(z, e / o);
      u64 zinv = f.inv(zo);
      u64 oinv = f.inv(o % f.p);
      std::vector<u64> pv(o);
      for (u64 l = 0; l < o; ++l)
        pv[l] = chi[static_cast<std::size_t>(g.power_class(static_cast<int>(i), static_cast<long long>(l)))];
      std::vector<long> counts(e, 0);
      u64 total = 0;
      for (u64 kk = 0; kk < o; ++kk) {
        u64 acc = 0, step = f.pow(zinv, kk), w = 1;
        for (u64 l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(pv[l], w));
          w = f.mul(w, step);
        }
        u64 m = f.mul(acc, oinv);
        if (m > deg) throw std::logic_error("eigenvalue multiplicity out of range while lifting");
        counts[kk * (e / o)] = static_cast<long>(m);
        total += m;
      }
      if (total != deg) throw std::logic_error("lifted multiplicities do not sum to the degree");
      vals[i] = Cyclotomic::from_exponent_counts(e, counts);
    }
    ClassFunction cf(gp, std::move(vals));
    std::vector<BigRational> key = flatten(cf, e);
    rows.emplace_back(std::move(key), std::move(cf));
  }
  auto is_trivial = [](const ClassFunction& c) {
    for (const auto& v : c.values)
      if (v != Cyclotomic(1L)) return false;
    return true;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    bool ta = is_trivial(a.second), tb = is_trivial(b.second);
    if (ta != tb) return ta;
    if (a.second.at_identity() != b.second.at_identity())
      return a.second.at_identity().rational_value() < b.second.at_identity().rational_value();
    return a.first > b.first;
  });
  BigInt sumsq = 0;
  for (auto& r : rows) {
    unsigned long d = r.second.at_identity().rational_value().get_num().get_ui();
    t.degrees.push_back(d);
    sumsq += BigInt(d) * d;
    t.irr.push_back(std::move(r.second));
  }
  if (sumsq != BigInt(static_cast<unsigned long>(n))) throw std::logic_error("sum of squared degrees differs from |G|");
  return t;
}

std::vector<std::pair<std::size_t, Cyclotomic>> decompose(const ClassFunction& f, const CharacterTable& t) {
  if (f.group != t.group) throw InputError("class function and table are on different groups");
  std::vector<std::pair<std::size_t, Cyclotomic>> out;
  if (f.is_zero()) return out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclotomic m = inner_product(f, t.irr[i]);
    if (!m.is_zero()) out.emplace_back(i, m.reduced());
  }
  return out;
}

std::vector<long> character_multiplicities(const ClassFunction& f, const CharacterTable& t) {
  if (f.group != t.group) throw InputError("class function and table are on different groups");
  std::vector<long> out(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclotomic m = inner_product(f, t.irr[i]);
    if (!m.is_rational()) throw PreconditionError("not a character: irrational multiplicity");
    BigRational q = m.rational_value();
    if (q.get_den() != 1 || q < 0) throw PreconditionError("not a character: multiplicity " + q.get_str());
    out[i] = q.get_num().get_si();
  }
  return out;
}

KernelInfo kernel_and_faithful(const ClassFunction& chi, const CharacterTable& t) {
  character_multiplicities(chi, t);
  const auto& cls = chi.group->classes();
  std::vector<int> members;
  for (std::size_t c = 0; c < chi.size(); ++c)
    if (chi[c] == chi.at_identity()) members.insert(members.end(), cls[c].members.begin(), cls[c].members.end());
  std::sort(members.begin(), members.end());
  KernelInfo out{subgroup_from_members(chi.group, std::move(members)), false};
  out.faithful = out.kernel.order() == 1;
  return out;
}

std::vector<std::size_t> faithful_irreducibles(const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool faithful = true;
    for (std::size_t c = 1; c < t.irr[i].size() && faithful; ++c)
      if (t.irr[i][c] == t.irr[i].at_identity()) faithful = false;
    if (faithful) out.push_back(i);
  }
  return out;
}

}  // namespace artin
