#include "drinfeld/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "drinfeld/congruence.hpp"
#include "drinfeld/curveinv.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/qdiv.hpp"
#include "drinfeld/useries.hpp"
#include "drinfeld/weights.hpp"

namespace drinfeld::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  unsigned q = 0;
  std::string modulus;
  std::string format = "table";
  unsigned long seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.q, "odd prime power q")->required();
  cmd->add_option("--modulus", c.modulus,
                  "for q = p^e, e > 1: comma-separated F_p coefficients of the monic modulus, "
                  "lowest degree first");
  cmd->add_option("--format", c.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--seed", c.seed, "seed for randomized checks");
}

FqPtr make_field(const Common& c) {
  if (c.modulus.empty()) return Fq::make(c.q);
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(c.modulus);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  if (coeffs.size() < 2) throw std::invalid_argument("modulus needs at least two coefficients");
  const auto base = Fq::make(c.q);
  if (base->e() + 1 != coeffs.size()) {
    throw std::invalid_argument("modulus degree does not match q");
  }
  return Fq::make(base->p(), base->e(), coeffs);
}

json witness_json(const EllipticWitness& w, const Fq& F) {
  return {
      {"gamma",
       {{"a", w.gamma.a.to_string()},
        {"b", w.gamma.b.to_string()},
        {"c", w.gamma.c.to_string()},
        {"d", w.gamma.d.to_string()}}},
      {"det", F.to_string(w.det)},
      {"det_is_square", w.det_is_square},
      {"quad_b", w.quad_b.to_string()},
      {"quad_c", w.quad_c.to_string()},
      {"quadratic", "z^2+" + w.quad_b.to_string() + "*z+" + w.quad_c.to_string()},
  };
}

json header(const char* command, const Common& c) {
  return {{"schema", kSchema}, {"command", command}, {"q", c.q}};
}

void emit(std::ostream& out, const Common& c, const json& payload,
          const std::function<void(std::ostream&)>& table) {
  if (c.format == "json") {
    out << payload.dump(2) << '\n';
  } else {
    table(out);
  }
}

std::string relation_text(const PresentationRelation& rel) {
  std::string s;
  for (const auto& t : rel.terms) {
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) mono = "1";
    const mpq_class& c = t.coeff;
    std::string cs;
    if (c == 1) {
      cs = s.empty() ? "" : " + ";
    } else if (c == -1) {
      cs = s.empty() ? "-" : " - ";
    } else if (c < 0) {
      cs = (s.empty() ? "-" : " - ") + mpq_class(-c).get_str() + "*";
    } else {
      cs = (s.empty() ? "" : " + ") + c.get_str() + "*";
    }
    s += cs + mono;
  }
  return s;
}

// Number of (a, b) >= 0 with a(q-1) + b(q+1) = k.
long gh_monomials(long k, long q) {
  long n = 0;
  for (long b = 0; b * (q + 1) <= k; ++b) {
    if ((k - b * (q + 1)) % (q - 1) == 0) ++n;
  }
  return n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Drinfeld modular curves and section rings of their log-canonical divisors"};
  app.require_subcommand(1);

  Common common;
  std::string group_text;
  unsigned deg_bound = 0;
  std::string preset_text;
  long k_max = 20;
  long max_weight = 0;
  long k = 0;
  std::string series_text;
  long v_inf = 0, v_e = 0;
  std::vector<long> v_other;

  auto* parity_cmd = app.add_subcommand("parity", "square/non-square classification of a group");
  add_common(parity_cmd, common);
  parity_cmd->add_option("--group", group_text, "group descriptor, e.g. gamma1:4*T+3")->required();
  parity_cmd->add_option("--deg-bound", deg_bound, "degree bound of the search box");

  auto* ell_cmd = app.add_subcommand("ellsearch", "list elliptic witnesses in the search box");
  add_common(ell_cmd, common);
  ell_cmd->add_option("--group", group_text, "group descriptor")->required();
  ell_cmd->add_option("--deg-bound", deg_bound, "degree bound of the search box");

  auto* cusps_cmd = app.add_subcommand("cusps", "cusp orbits of primitive vectors");
  add_common(cusps_cmd, common);
  cusps_cmd->add_option("--group", group_text, "group descriptor")->required();

  auto* dims_cmd = app.add_subcommand("dims", "dimension table with h0 cross-checks");
  add_common(dims_cmd, common);
  dims_cmd->add_option("--preset", preset_text, "GL2A_2 or Gamma0T_2")->required();
  dims_cmd->add_option("--k-max", k_max, "largest (even) weight");

  auto* ring_cmd = app.add_subcommand("sectionring", "generators and relations of the section ring");
  add_common(ring_cmd, common);
  ring_cmd->add_option("--preset", preset_text, "GL2A_2 or Gamma0T_2")->required();
  ring_cmd->add_option("--max-weight", max_weight, "truncation weight (default 4(q+1))");

  auto* split_cmd = app.add_subcommand("split", "split a Gamma_2 u-series into two Gamma types");
  add_common(split_cmd, common);
  split_cmd->add_option("--k", k, "even weight")->required();
  split_cmd->add_option("--series", series_text, "sum of c*u^n terms")->required();

  auto* val_cmd = app.add_subcommand("valence", "check the level-one valence formula");
  add_common(val_cmd, common);
  val_cmd->add_option("--k", k, "weight")->required();
  val_cmd->add_option("--v-inf", v_inf, "vanishing order at infinity");
  val_cmd->add_option("--v-e", v_e, "vanishing order at the elliptic point");
  val_cmd->add_option("--v-other", v_other, "orders at non-elliptic classes");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const FqPtr F = make_field(common);
    const unsigned q = F->q();

    if (parity_cmd->parsed()) {
      const GroupSpec G = parse_group(group_text, F);
      const Parity p = parity(G, F, deg_bound);
      json j = header("parity", common);
      j["group"] = G.to_string();
      j["deg_bound"] = deg_bound;
      j["classification"] = p.to_string();
      j["witness"] = p.witness ? witness_json(*p.witness, *F) : json(nullptr);
      emit(out, common, j, [&](std::ostream& o) {
        o << "group          " << G.to_string() << '\n'
          << "deg bound      " << deg_bound << '\n'
          << "classification " << p.to_string() << '\n';
        if (p.witness) {
          o << "witness        " << p.witness->gamma.to_string() << '\n'
            << "det            " << F->to_string(p.witness->det)
            << (p.witness->det_is_square ? " (square)" : " (non-square)") << '\n'
            << "fixed quadratic z^2+" << p.witness->quad_b.to_string() << "*z+"
            << p.witness->quad_c.to_string() << '\n';
        }
      });
      return kOk;
    }

    if (ell_cmd->parsed()) {
      const GroupSpec G = parse_group(group_text, F);
      const auto ws = elliptic_search(G, F, deg_bound);
      json j = header("ellsearch", common);
      j["group"] = G.to_string();
      j["deg_bound"] = deg_bound;
      j["witnesses"] = json::array();
      for (const auto& w : ws) j["witnesses"].push_back(witness_json(w, *F));
      j["distinct_quadratics"] = group_by_quadratic(ws).size();
      emit(out, common, j, [&](std::ostream& o) {
        o << ws.size() << " witnesses, " << group_by_quadratic(ws).size()
          << " distinct fixed-point quadratics\n";
        for (const auto& w : ws) {
          o << w.gamma.to_string() << "  det " << F->to_string(w.det)
            << (w.det_is_square ? " sq" : " non-sq") << "  z^2+" << w.quad_b.to_string()
            << "*z+" << w.quad_c.to_string() << '\n';
        }
      });
      return kOk;
    }

    if (cusps_cmd->parsed()) {
      const GroupSpec G = parse_group(group_text, F);
      const CuspSet cs = cusps(G, F);
      json j = header("cusps", common);
      j["group"] = G.to_string();
      j["count"] = cs.count();
      j["reps"] = json::array();
      for (std::size_t i = 0; i < cs.count(); ++i) {
        j["reps"].push_back({{"u", cs.reps[i][0].to_string()},
                             {"v", cs.reps[i][1].to_string()},
                             {"orbit_size", cs.orbit_sizes[i]}});
      }
      emit(out, common, j, [&](std::ostream& o) {
        o << "cusps of " << G.to_string() << ": " << cs.count() << '\n';
        for (std::size_t i = 0; i < cs.count(); ++i) {
          o << "  (" << cs.reps[i][0].to_string() << ", " << cs.reps[i][1].to_string()
            << ")  orbit size " << cs.orbit_sizes[i] << '\n';
        }
      });
      return kOk;
    }

    if (dims_cmd->parsed()) {
      const Preset preset = parse_preset(preset_text);
      if (k_max < 2 || k_max % 2 != 0) throw std::invalid_argument("--k-max must be even and >= 2");
      const QDivisor D = log_canonical_divisor(assemble_invariants(preset, F));
      json j = header("dims", common);
      j["preset"] = to_string(preset);
      j["divisor"] = D.to_string();
      j["rows"] = json::array();
      j["totals"] = json::array();
      std::ostringstream table;
      if (preset == Preset::Gamma0T_2) {
        table << std::setw(4) << "k" << std::setw(4) << "l" << std::setw(6) << "dim"
              << std::setw(6) << "h0" << "  agree\n";
      } else {
        table << std::setw(4) << "k" << std::setw(10) << "#g^a h^b" << std::setw(6) << "h0"
              << "  agree\n";
      }
      for (long kk = 2; kk <= k_max; kk += 2) {
        const long h_total = h0(D.scaled(kk / 2));
        if (preset == Preset::Gamma0T_2) {
          long sum = 0;
          for (long l : type_solutions(kk, q)) {
            const long dim = dim_gamma0T(kk, l, q);
            const long hw = h0_weighted(preset, q, kk, l);
            sum += dim;
            j["rows"].push_back({{"k", kk}, {"l", l}, {"dim", dim}, {"h0", hw}, {"agree", dim == hw}});
            table << std::setw(4) << kk << std::setw(4) << l << std::setw(6) << dim
                  << std::setw(6) << hw << "  " << (dim == hw ? "yes" : "no") << '\n';
          }
          j["totals"].push_back(
              {{"k", kk}, {"dim_sum", sum}, {"h0_divisor", h_total}, {"agree", sum == h_total}});
        } else {
          const long count = gh_monomials(kk, q);
          j["rows"].push_back(
              {{"k", kk}, {"dim", count}, {"h0", h_total}, {"agree", count == h_total}});
          table << std::setw(4) << kk << std::setw(10) << count << std::setw(6) << h_total
                << "  " << (count == h_total ? "yes" : "no") << '\n';
        }
      }
      emit(out, common, j, [&](std::ostream& o) {
        o << "divisor " << D.to_string() << '\n' << table.str();
        if (preset == Preset::Gamma0T_2) {
          o << "summed over types vs h0 of the divisor:\n";
          for (const auto& t : j["totals"]) {
            o << std::setw(4) << t["k"].get<long>() << std::setw(6) << t["dim_sum"].get<long>()
              << std::setw(6) << t["h0_divisor"].get<long>() << "  "
              << (t["agree"].get<bool>() ? "yes" : "no") << '\n';
          }
        }
      });
      return kOk;
    }

    if (ring_cmd->parsed()) {
      const Preset preset = parse_preset(preset_text);
      if (max_weight == 0) max_weight = 4 * (static_cast<long>(q) + 1);
      const QDivisor D = log_canonical_divisor(assemble_invariants(preset, F));
      const RingPresentation pres = presentation(D, max_weight);
      json j = header("sectionring", common);
      j["preset"] = to_string(preset);
      j["divisor"] = D.to_string();
      j["truncation_weight"] = pres.truncation_weight;
      j["generators"] = json::array();
      for (const auto& g : pres.generators) {
        j["generators"].push_back(
            {{"weight", g.weight}, {"degree", g.degree}, {"section_index", g.section_index}});
      }
      j["relations"] = json::array();
      for (const auto& r : pres.relations) {
        json combo = json::array();
        for (const auto& t : r.terms) combo.push_back({{"coeff", t.coeff.get_str()}, {"exponents", t.exponents}});
        j["relations"].push_back(
            {{"weight", r.weight}, {"monomial_combination", combo}, {"text", relation_text(r)}});
      }
      emit(out, common, j, [&](std::ostream& o) {
        o << "divisor " << D.to_string() << "  (truncated at weight " << pres.truncation_weight
          << ")\n";
        o << "generators:\n";
        for (std::size_t i = 0; i < pres.generators.size(); ++i) {
          o << "  x" << i << "  weight " << pres.generators[i].weight << '\n';
        }
        o << "relations:\n";
        if (pres.relations.empty()) o << "  (none)\n";
        for (const auto& r : pres.relations) {
          o << "  weight " << r.weight << ": " << relation_text(r) << " = 0\n";
        }
      });
      return kOk;
    }

    if (split_cmd->parsed()) {
      const USeries f = parse_series(series_text, F, k);
      const auto [f1, f2] = split(f, k);
      json j = header("split", common);
      j["k"] = k;
      j["f1"] = {{"series", f1.to_string()}, {"type", *f1.type()}};
      j["f2"] = {{"series", f2.to_string()}, {"type", *f2.type()}};
      emit(out, common, j, [&](std::ostream& o) {
        o << "f1 = " << f1.to_string() << "   type " << *f1.type() << '\n'
          << "f2 = " << f2.to_string() << "   type " << *f2.type() << '\n';
      });
      return kOk;
    }

    if (val_cmd->parsed()) {
      const VanishingProfile prof{k, v_inf, v_e, v_other};
      const bool holds = valence_check(prof, q);
      json j = header("valence", common);
      j["k"] = k;
      j["v_inf"] = v_inf;
      j["v_e"] = v_e;
      j["v_other"] = v_other;
      j["holds"] = holds;
      emit(out, common, j, [&](std::ostream& o) {
        o << "valence formula " << (holds ? "holds" : "fails") << '\n';
      });
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const WorkBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace drinfeld::cli
