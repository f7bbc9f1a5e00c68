#include "drinfeld/qdiv.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

long floor_long(const mpq_class& x) {
  const mpz_class f = floor_q(x);
  if (!f.fits_slong_p()) throw std::overflow_error("divisor coefficient out of range");
  return f.get_si();
}

mpq_class frac(long n, long d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

std::string to_string(QPoint p) {
  switch (p) {
    case QPoint::Zero: return "0";
    case QPoint::One: return "1";
    case QPoint::Infinity: return "inf";
  }
  return "?";
}

QDivisor::QDivisor(std::initializer_list<std::pair<const QPoint, mpq_class>> terms) {
  for (const auto& [p, c] : terms) set(p, c);
}

mpq_class QDivisor::coeff(QPoint p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void QDivisor::set(QPoint p, const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  if (v == 0) {
    terms_.erase(p);
  } else {
    terms_[p] = v;
  }
}

mpq_class QDivisor::degree() const {
  mpq_class s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

bool QDivisor::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

QDivisor QDivisor::scaled(const mpq_class& s) const {
  QDivisor out;
  for (const auto& [p, c] : terms_) out.set(p, c * s);
  return out;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
  QDivisor out = a;
  for (const auto& [p, c] : b.terms_) out.set(p, out.coeff(p) + c);
  return out;
}

std::string QDivisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")(" + drinfeld::to_string(p) + ")";
  }
  return out;
}

QDivisor floor_div(const QDivisor& D) {
  QDivisor out;
  for (const auto& [p, c] : D.terms()) out.set(p, mpq_class(floor_q(c)));
  return out;
}

long h0(const QDivisor& D) {
  const long deg = floor_long(floor_div(D).degree());
  return deg >= 0 ? deg + 1 : 0;
}

SectionBasis rr_basis(const QDivisor& D) {
  SectionBasis out;
  out.div = floor_div(D);
  const long A = floor_long(out.div.coeff(QPoint::Zero));
  const long B = floor_long(out.div.coeff(QPoint::One));
  const long C = floor_long(out.div.coeff(QPoint::Infinity));
  for (long m = 0; m <= A + B + C; ++m) out.basis.push_back({m - A, -B});
  return out;
}

std::vector<mpq_class> best_lower_approximations(const mpq_class& alpha) {
  if (alpha < 0) throw std::invalid_argument("best_lower_approximations: alpha must be >= 0");
  // Stern-Brocot descent between consecutive integers: every time the left
  // endpoint moves it is a new best lower approximation.
  mpz_class ln = floor_q(alpha), ld = 1;
  mpz_class rn = ln + 1, rd = 1;
  std::vector<mpq_class> out{mpq_class(ln)};
  while (mpq_class(ln, ld) != alpha) {
    const mpz_class mn = ln + rn, md = ld + rd;
    mpq_class mid(mn, md);
    mid.canonicalize();
    if (mid <= alpha) {
      ln = mn;
      ld = md;
      out.push_back(mid);
    } else {
      rn = mn;
      rd = md;
    }
  }
  return out;
}

QDivisor log_canonical_divisor(const CurveInvariants& inv) {
  if (inv.genus != 0) throw std::invalid_argument("log_canonical_divisor: genus must be 0");
  if (inv.elliptic_points.size() > 1 || inv.cusps.count() > 2) {
    throw std::invalid_argument("log_canonical_divisor: at most one elliptic point and two cusps");
  }
  QDivisor D{{QPoint::Infinity, mpq_class(-2)}};
  for (const auto& e : inv.elliptic_points) {
    D = D + QDivisor{{QPoint::One, 1 - frac(1, e.stab_order_gamma2)}};
  }
  std::vector<QPoint> free_slots{QPoint::Infinity, QPoint::Zero};
  std::vector<std::pair<QPoint, unsigned>> placed;
  std::vector<std::size_t> unplaced;
  for (std::size_t i = 0; i < inv.cusps.count(); ++i) {
    const auto& [u, v] = inv.cusps.reps[i];
    QPoint where;
    if (v.is_zero()) {
      where = QPoint::Infinity;
    } else if (u.is_zero()) {
      where = QPoint::Zero;
    } else {
      unplaced.push_back(i);
      continue;
    }
    free_slots.erase(std::find(free_slots.begin(), free_slots.end(), where));
    placed.emplace_back(where, inv.cusp_stab_orders[i]);
  }
  for (std::size_t k = 0; k < unplaced.size(); ++k) {
    placed.emplace_back(free_slots[k], inv.cusp_stab_orders[unplaced[k]]);
  }
  for (const auto& [where, order] : placed) {
    D = D + QDivisor{{where, 1 + frac(1, order)}};
  }
  return D;
}

long h0_weighted(Preset preset, unsigned q, long k, long l) {
  if (preset != Preset::Gamma0T_2) {
    throw std::invalid_argument("h0_weighted is defined for the Gamma0T_2 preset only");
  }
  if (k <= 0 || k % 2 != 0) throw std::invalid_argument("h0_weighted: k must be even and positive");
  const long Q = q;
  const mpq_class alpha = frac(2 * k - 2 * l - k * Q, k * (Q - 1));
  const long value = 2 * floor_long(mpq_class(k / 2) * alpha) + k + 1;
  return std::max(0L, value);
}

namespace {

// poly(t) * t^(-A) * (t - 1)^(-B); poly has integer coefficients stored as rationals.
struct Section {
  QVector poly;
  long A = 0;
  long B = 0;
};

QVector poly_mul(const QVector& x, const QVector& y) {
  QVector out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

struct FloorData {
  long A, B, C;
  long N() const { return A + B + C; }
};

class SectionRing {
 public:
  SectionRing(const QDivisor& D, std::size_t work_bound)
      : D_(D), work_bound_(work_bound) {
    for (const auto& [p, c] : D.terms()) {
      (void)c;
      if (p != QPoint::Zero && p != QPoint::One && p != QPoint::Infinity) {
        throw std::invalid_argument("presentation: unsupported point");
      }
    }
  }

  FloorData floor_at(long d) const {
    const QDivisor F = floor_div(D_.scaled(d));
    return {floor_long(F.coeff(QPoint::Zero)), floor_long(F.coeff(QPoint::One)),
            floor_long(F.coeff(QPoint::Infinity))};
  }

  // Coefficient vector of s in the degree-d model P(t) / (t^A (t-1)^B).
  QVector to_degree_model(const Section& s, long d) const {
    const FloorData f = floor_at(d);
    const long shift_t = f.A - s.A;
    const long shift_t1 = f.B - s.B;
    if (shift_t < 0 || shift_t1 < 0) throw std::logic_error("section not in H^0(floor(dD))");
    QVector p = s.poly;
    if (shift_t > 0) p.insert(p.begin(), static_cast<std::size_t>(shift_t), mpq_class(0));
    const QVector t_minus_1{mpq_class(-1), mpq_class(1)};
    for (long i = 0; i < shift_t1; ++i) p = poly_mul(p, t_minus_1);
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (static_cast<long>(p.size()) > f.N() + 1) throw std::logic_error("section degree too large");
    p.resize(static_cast<std::size_t>(f.N() + 1), mpq_class(0));
    return p;
  }

  const Section& monomial(const std::vector<unsigned>& exps) {
    std::vector<unsigned> key = exps;
    while (!key.empty() && key.back() == 0) key.pop_back();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Section s;
    if (key.empty()) {
      s = {QVector{mpq_class(1)}, 0, 0};
    } else {
      std::vector<unsigned> prev = key;
      const std::size_t j = key.size() - 1;
      --prev[j];
      const Section base = monomial(prev);
      const Section& g = gens_[j];
      s = {poly_mul(base.poly, g.poly), base.A + g.A, base.B + g.B};
    }
    return memo_.emplace(std::move(key), std::move(s)).first->second;
  }

  // Exponent vectors of total degree d, lexicographically increasing.
  std::vector<std::vector<unsigned>> monomials_of_degree(long d) const {
    const std::size_t n = gen_degrees_.size();
    // count first so an oversized degree fails fast
    std::vector<std::size_t> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (long gd : gen_degrees_) {
      for (long t = gd; t <= d; ++t) {
        ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - gd)];
        if (ways[static_cast<std::size_t>(t)] > work_bound_) {
          throw WorkBoundExceeded("presentation: too many monomials in degree " +
                                  std::to_string(d));
        }
      }
    }
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
      if (i == n) {
        if (rest == 0) out.push_back(cur);
        return;
      }
      for (long e = 0; e * gen_degrees_[i] <= rest; ++e) {
        cur[i] = static_cast<unsigned>(e);
        rec(i + 1, rest - e * gen_degrees_[i]);
      }
      cur[i] = 0;
    };
    rec(0, d);
    return out;
  }

  void add_generator(long d, long m) {
    const FloorData f = floor_at(d);
    QVector poly(static_cast<std::size_t>(m) + 1, mpq_class(0));
    poly.back() = 1;
    gens_.push_back({std::move(poly), f.A, f.B});
    gen_degrees_.push_back(d);
  }

  std::size_t generator_count() const { return gens_.size(); }

 private:
  QDivisor D_;
  std::size_t work_bound_;
  std::vector<Section> gens_;
  std::vector<long> gen_degrees_;
  std::map<std::vector<unsigned>, Section> memo_;
};

}  // namespace

RingPresentation presentation(const QDivisor& D, long max_weight, std::size_t work_bound) {
  if (max_weight < 2 || max_weight % 2 != 0) {
    throw std::invalid_argument("presentation: max_weight must be even and >= 2");
  }
  RingPresentation out;
  out.truncation_weight = max_weight;
  SectionRing ring(D, work_bound);
  struct StoredRelation {
    long degree;
    std::vector<RelationTerm> terms;
  };
  std::vector<StoredRelation> relations;
  std::size_t work = 0;  // matrix entries processed so far

  for (long d = 1; 2 * d <= max_weight; ++d) {
    DegreeStats st;
    st.degree = d;
    const FloorData f = ring.floor_at(d);
    const long h = f.N() >= 0 ? f.N() + 1 : 0;
    st.h0 = h;
    const std::size_t ncols = static_cast<std::size_t>(std::max(0L, h));
    const std::size_t ngens = ring.generator_count();

    const auto monos = ring.monomials_of_degree(d);
    st.monomials = monos.size();
    work += (monos.size() + 1) * (ncols + 1);
    if (work > work_bound) {
      throw WorkBoundExceeded("presentation: linear algebra up to weight " + std::to_string(2 * d) +
                              " exceeds the work bound");
    }
    if (h == 0 && !monos.empty()) throw std::logic_error("nonzero product in an empty H^0");
    std::map<std::vector<unsigned>, std::size_t> index;
    QMatrix rows;
    rows.reserve(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      index.emplace(monos[i], i);
      rows.push_back(ring.to_degree_model(ring.monomial(monos[i]), d));
    }

    // generators: standard basis vectors t^m outside the span of products
    EchelonBasis image(ncols);
    for (const auto& r : rows) image.insert(r);
    for (std::size_t m = 0; m < ncols; ++m) {
      QVector e(ncols, 0);
      e[m] = 1;
      if (image.insert(e)) {
        ring.add_generator(d, static_cast<long>(m));
        out.generators.push_back({2 * d, d, static_cast<long>(m)});
        ++st.new_generators;
      }
    }

    // relations: kernel of the product map modulo multiples of earlier relations
    if (!monos.empty()) {
      const QMatrix kernel = left_kernel(rows, ncols);
      st.kernel_dim = kernel.size();
      EchelonBasis known(monos.size());
      for (const auto& rel : relations) {
        for (const auto& mult : ring.monomials_of_degree(d - rel.degree)) {
          QVector v(monos.size(), 0);
          for (const auto& term : rel.terms) {
            std::vector<unsigned> e(ngens, 0);
            for (std::size_t i = 0; i < term.exponents.size(); ++i) e[i] = term.exponents[i];
            for (std::size_t i = 0; i < ngens; ++i) e[i] += mult[i];
            v[index.at(e)] += term.coeff;
          }
          known.insert(v);
        }
      }
      st.consequence_dim = known.rank();
      for (const auto& kv : kernel) {
        if (!known.insert(kv)) continue;
        PresentationRelation rel;
        rel.weight = 2 * d;
        for (std::size_t i = 0; i < kv.size(); ++i) {
          if (kv[i] != 0) rel.terms.push_back({kv[i], monos[i]});
        }
        relations.push_back({d, rel.terms});
        out.relations.push_back(std::move(rel));
        ++st.new_relations;
      }
    }
    out.stats.push_back(st);
  }
  // pad exponent vectors to the final generator count
  for (auto& rel : out.relations) {
    for (auto& t : rel.terms) t.exponents.resize(out.generators.size(), 0);
  }
  return out;
}

}  // namespace drinfeld
