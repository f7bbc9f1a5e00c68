// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail 1,3]
//
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default) and 1 otherwise, so a criterion that starts passing or
// a new failure both break the run.

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/cli.hpp"
#include "drinfeld/curveinv.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/laurent.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/qdiv.hpp"
#include "drinfeld/useries.hpp"
#include "drinfeld/weights.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 for none
  std::function<void(Outcome&)> body;
};

template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

QDivisor preset_divisor(Preset p, unsigned q) {
  return log_canonical_divisor(assemble_invariants(p, Fq::make(q)));
}

void parity_reproduction(Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run({"drinfeld", "parity", "--q", "7", "--group", "gamma1:4*T+3",
                             "--deg-bound", "0", "--format", "json"},
                            out, err);
  if (code != 0) return o.fail(cat("exit code ", code, ": ", err.str()));
  const auto j = nlohmann::json::parse(out.str());
  const std::string cls = j.at("classification");
  o.require(cls == "NonSquare", cat("classification is ", cls, ", expected NonSquare"));

  const auto F = Fq::make(7);
  const Mat2 gamma{parse_poly("4*T+4", F), parse_poly("1", F), parse_poly("5*T+2", F),
                   parse_poly("3", F)};
  const auto G = parse_group("gamma1:4*T+3", F);
  const auto ws = elliptic_search(G, F, 0);
  bool listed = false;
  for (const auto& w : ws) listed = listed || w.gamma == gamma;
  o.require(listed, cat("gamma not in the witness list (", ws.size(), " witnesses at bound 0)"));

  // Diagnostics on gamma itself.
  const RatK qb(gamma.d - gamma.a, gamma.c);
  const RatK qc(-gamma.b, gamma.c);
  const RatK want_b(parse_poly("2*T+4", F), parse_poly("T+6", F));
  const RatK want_c(parse_poly("4", F), parse_poly("T+6", F));
  if (!(qb == want_b && qc == want_c)) o.fail("fixed-point quadratic of gamma differs");
  if (!member(gamma, G)) o.fail("gamma is not a member of gamma1:4*T+3");
  if (!quad_irreducible_kinf(qb, qc)) {
    o.fail("gamma is not elliptic: the discriminant 4(T^2+1)/(T+6)^2 has valuation 0 and "
           "leading coefficient 4 = 2^2, so it is a square in K_inf and the quadratic splits");
  }
  if (gamma.a.degree() > 0 || gamma.c.degree() > 0) {
    o.fail("gamma has non-constant entries, outside the degree-0 search box");
  }
}

void congruence_oracle(Outcome& o) {
  for (unsigned q : {3u, 5u, 7u, 9u, 11u}) {
    for (long k = 0; k <= 200; ++k) {
      std::set<long> brute;
      for (long l = 0; l < static_cast<long>(q) - 1; ++l) {
        if (canonical_residue(2 * l - k, q - 1) == 0) brute.insert(l);
      }
      const auto got = type_solutions(k, q);
      o.require(std::set<long>(got.begin(), got.end()) == brute, cat("q=", q, " k=", k));
    }
  }
}

void dims_gamma0T(Outcome& o) {
  int clause1 = 0, clause2 = 0;
  for (unsigned q : {3u, 5u, 7u}) {
    const auto D = preset_divisor(Preset::Gamma0T_2, q);
    for (long k = 2; k <= 60; k += 2) {
      long sum = 0;
      for (long l : type_solutions(k, q)) {
        const long dim = dim_gamma0T(k, l, q);
        sum += dim;
        const long hw = h0_weighted(Preset::Gamma0T_2, q, k, l);
        if (hw != dim) {
          if (clause2++ < 4) o.fail(cat("h0_weighted q=", q, " k=", k, " l=", l, ": ", hw, " vs dim ", dim));
        }
      }
      const long h = h0(D.scaled(k / 2));
      if (h != sum) {
        if (clause1++ < 4) o.fail(cat("h0 q=", q, " k=", k, ": ", h, " vs ", sum));
      }
    }
  }
  if (clause1 + clause2 > 0) {
    o.notes.push_back(cat("summed h0 disagreements: ", clause1, "; per-type disagreements: ", clause2));
  }
  if (clause2 > 0) {
    o.notes.push_back(
        "per-type clause: 2 floor((k/2) alpha) + k + 1 is always odd, so it equals 2 floor(m/2) + 1 "
        "with m = (k - 2l)/(q - 1) and misses dim = m + 1 whenever m is odd");
  }
}

void dims_gl2(Outcome& o) {
  for (unsigned q : {3u, 5u, 7u}) {
    const auto D = preset_divisor(Preset::GL2A_2, q);
    const long Q = q;
    for (long k = 2; k <= 60; k += 2) {
      long n = 0;
      for (long a = 0; a * (Q - 1) <= k; ++a) n += (k - a * (Q - 1)) % (Q + 1) == 0;
      const long h = h0(D.scaled(k / 2));
      o.require(h == n, cat("q=", q, " k=", k, ": h0 ", h, " vs ", n));
    }
  }
}

void presentation_gl2(Outcome& o) {
  for (unsigned q : {3u, 5u, 7u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = presentation(preset_divisor(Preset::GL2A_2, q), 4 * (q + 1));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<long> w;
    for (const auto& g : r.generators) w.push_back(g.weight);
    o.require(w == std::vector<long>{q - 1L, q + 1L}, cat("q=", q, ": generator weights differ"));
    o.require(r.relations.empty(), cat("q=", q, ": ", r.relations.size(), " relations"));
    o.require(s < 30.0, cat("q=", q, ": ", s, " s"));
  }
}

void presentation_gamma0T(Outcome& o) {
  for (unsigned q : {3u, 5u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = presentation(preset_divisor(Preset::Gamma0T_2, q), 4 * (q + 1));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s < 30.0, cat("q=", q, ": ", s, " s"));
    std::multiset<long> w;
    for (const auto& g : r.generators) w.insert(g.weight);
    if (w != std::multiset<long>{2, q - 1L, q - 1L}) {
      o.fail(cat("q=", q, ": generator weights differ"));
      continue;
    }
    if (r.relations.size() != 1) {
      o.fail(cat("q=", q, ": ", r.relations.size(), " relations"));
      continue;
    }
    const auto& rel = r.relations[0];
    o.require(rel.weight == 2 * (q - 1L), cat("q=", q, ": relation weight ", rel.weight));
    // Support {U V, Z^(q-1)}: a pure (q-1)st power of one generator and the
    // product of the two others.
    bool ok = rel.terms.size() == 2;
    if (ok) {
      int zi = -1;
      for (int t = 0; t < 2 && zi < 0; ++t) {
        const auto& e = rel.terms[t].exponents;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] == q - 1) zi = static_cast<int>(i);
        }
        if (zi >= 0) {
          const auto& other = rel.terms[1 - t].exponents;
          for (std::size_t i = 0; i < other.size(); ++i) {
            const unsigned want = static_cast<int>(i) == zi ? 0u : 1u;
            ok = ok && other[i] == want;
            if (static_cast<int>(i) != zi) ok = ok && e[i] == 0;
          }
          ok = ok && r.generators[static_cast<std::size_t>(zi)].weight == 2;
        }
      }
      ok = ok && zi >= 0;
    }
    o.require(ok, cat("q=", q, ": relation support is not {UV, Z^", q - 1, "}"));
  }
}

void cusp_counts(Outcome& o) {
  const auto F5 = Fq::make(5);
  const auto c0 = cusps(parse_group("gamma0:T", F5), F5);
  std::set<std::pair<std::string, std::string>> reps;
  for (const auto& r : c0.reps) reps.insert({r[0].to_string(), r[1].to_string()});
  o.require(reps == std::set<std::pair<std::string, std::string>>{{"1", "0"}, {"0", "1"}},
            cat("gamma0:T reps differ (", c0.count(), " cusps)"));
  for (unsigned q : {3u, 5u, 7u}) {
    const auto F = Fq::make(q);
    o.require(cusps(GroupSpec::full(), F).count() == 1, cat("full q=", q));
    const auto n = cusps(parse_group("gammaN:T", F), F).count();
    o.require(n == q + 1, cat("gammaN:T q=", q, ": ", n));
  }
}

void square_oracle(Outcome& o) {
  oracle::Rng rng(8);
  const unsigned qs[] = {3, 5, 7, 9};
  for (int i = 0; i < 1000; ++i) {
    const auto F = Fq::make(qs[i % 4]);
    const auto x = oracle::random_series(F, 6, 32, rng);
    o.require(is_square_kinf(x * x), cat("square of series ", i, " rejected"));
    const bool crit = x.valuation() % 2 == 0 && is_square_fq(*F, x.leading());
    o.require(is_square_kinf(x) == crit, cat("series ", i, ": valuation-parity criterion differs"));
  }
  for (int i = 0; i < 1000; ++i) {
    const unsigned q = qs[i % 3];
    const auto F = Fq::make(q);
    const auto b = oracle::random_ratk(F, 2, rng);
    const auto c = oracle::random_ratk(F, 2, rng);
    const bool irr = quad_irreducible_kinf(b, c, 30);
    o.require(irr == !oracle::quadratic_has_root(b, c, q, 30),
              cat("q=", q, " b=", b.to_string(), " c=", c.to_string()));
  }
}

void split_round_trip(Outcome& o) {
  oracle::Rng rng(9);
  for (unsigned q : {3u, 5u, 7u}) {
    const auto F = Fq::make(q);
    const long m = q - 1;
    for (int i = 0; i < 500; ++i) {
      const long k = 2 * static_cast<long>(rng() % (2 * q));
      std::vector<RatK> c(24, RatK::zero(F));
      for (std::size_t n = 0; n < c.size(); ++n) {
        if (canonical_residue(2 * static_cast<long>(n) - k, m) == 0 && rng() % 3 != 0) {
          c[n] = oracle::random_ratk(F, 2, rng);
        }
      }
      const USeries f(F, c, k);
      const auto [f1, f2] = split(f, k);
      const std::string where = cat("q=", q, " k=", k, " sample ", i);
      o.require((f1 + f2).coefficients_equal(f), where + ": recombination");
      for (std::size_t n = 0; n < f.prec(); ++n) {
        const long nn = static_cast<long>(n);
        if (!f1.coeff(n).is_zero()) o.require(canonical_residue(nn - k / 2, m) == 0, where + ": f1 support");
        if (!f2.coeff(n).is_zero()) {
          o.require(canonical_residue(nn - k / 2 - m / 2, m) == 0, where + ": f2 support");
        }
      }
      for (auto a : F->units()) {
        const auto b = F->mul(a, a);
        o.require(scale_u(f, b).coefficients_equal(f.scaled(RatK::constant(F, F->pow(b, -k / 2)))),
                  where + ": square scaling");
        o.require(scale_u(f1, a).coefficients_equal(f1.scaled(RatK::constant(F, F->pow(a, -*f1.type())))),
                  where + ": f1 equivariance");
        o.require(scale_u(f2, a).coefficients_equal(f2.scaled(RatK::constant(F, F->pow(a, -*f2.type())))),
                  where + ": f2 equivariance");
      }
    }
  }
}

void valence(Outcome& o) {
  for (unsigned q : {3u, 5u, 7u}) {
    const long Q = q;
    const std::vector<VanishingProfile> profiles = {
        {Q - 1, 0, 1, {}}, {Q + 1, 1, 0, {}}, {Q * Q - 1, Q - 1, 0, {}}};
    for (const auto& p : profiles) {
      const std::string where = cat("q=", q, " k=", p.k);
      o.require(valence_check(p, q), where + ": holds");
      for (long d : {-1L, 1L}) {
        auto a = p;
        a.v_inf += d;
        if (a.v_inf >= 0) o.require(!valence_check(a, q), where + ": v_inf perturbation");
        auto b = p;
        b.v_e += d;
        if (b.v_e >= 0) o.require(!valence_check(b, q), where + ": v_e perturbation");
        auto c = p;
        c.k += d;
        o.require(!valence_check(c, q), where + ": weight perturbation");
      }
      auto z = p;
      z.v_other.push_back(1);
      o.require(!valence_check(z, q), where + ": extra zero");
    }
  }
}

void group_laws(Outcome& o) {
  const DetRestriction sq{DetRestriction::Kind::Squares};
  const std::pair<unsigned, const char*> groups[] = {
      {5, "full"}, {7, "full"}, {5, "gamma0:T"}, {7, "gamma0:4*T+3"}};
  for (const auto& [q, desc] : groups) {
    const auto F = Fq::make(q);
    const auto G = parse_group(desc, F);
    const auto G2 = G.with_det(sq);
    const auto rep = coset_rep_nonsquare(F);
    oracle::Rng rng(1100 + q);
    const std::string where = cat("q=", q, " ", desc);
    for (int i = 0; i < 200; ++i) {
      const auto g = oracle::random_gl2(F, G, 2, rng);
      const auto d = oracle::random_gl2(F, G2, 2, rng);
      const auto gi = g.inverse();
      o.require(member(g * d * gi, G2), where + ": normality");
      o.require(member(g, G2) || member(rep.inverse() * g, G2), where + ": coset");
      o.require(member(g * g, G2), where + ": square lands in G_2");
    }
    o.require(quotient_order(G, G2, *F) == 2, where + ": [G : G_2]");
    o.require(index_gamma2(G) == 2, where + ": index_gamma2");
  }
}

std::set<int> parse_ids(const std::string& s) {
  std::set<int> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) ids.insert(std::stoi(tok));
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected = parse_ids(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail ID,ID,...]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "parity reproduction (q=7, gamma1:4*T+3)", 1.0, parity_reproduction},
      {2, "congruence lemma vs brute force", 1.0, congruence_oracle},
      {3, "dimension cross-check Gamma0(T)_2", 5.0, dims_gamma0T},
      {4, "dimension cross-check GL2(A)_2", 5.0, dims_gl2},
      {5, "presentation GL2(A)_2", 0.0, presentation_gl2},
      {6, "presentation Gamma0(T)_2", 0.0, presentation_gamma0T},
      {7, "cusp counts", 0.0, cusp_counts},
      {8, "K_inf square and quadratic oracles", 0.0, square_oracle},
      {9, "split round trip and equivariance", 0.0, split_round_trip},
      {10, "valence formula", 0.0, valence},
      {11, "group laws", 2.0, group_laws},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(cat("exception: ", e.what()));
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && s >= c.time_limit_s) o.fail(cat("time limit ", c.time_limit_s, " s exceeded"));
    if (!o.pass) failed.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " ("
              << std::fixed << std::setprecision(3) << s << " s)\n";
    std::cout.unsetf(std::ios::floatfield);
    for (const auto& n : o.notes) std::cout << "       " << n << "\n";
  }

  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!expected.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected) std::cout << " " << id;
  }
  std::cout << "\n";
  if (failed != expected) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
