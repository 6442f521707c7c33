#include "afold/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "afold/catalog.hpp"
#include "afold/rees.hpp"
#include "afold/star.hpp"

namespace afold {

namespace {

int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Ctx {
  const RunConfig& cfg;
  Report& rep;
};

using Params = std::vector<std::pair<std::string, long>>;
using Body = std::function<void(CheckRecord&, const GroebnerOptions&)>;

void apply(CheckResult&& r, CheckRecord& rec) {
  rec.verdict = r.verdict;
  rec.witness = std::move(r.detail);
  rec.components = std::move(r.components);
}

// Runs one check with the configured budget, aggregating basis statistics
// into the record. A budget overrun is recorded, never escapes the suite.
void push(Ctx& ctx, std::string check, std::string input, Params params, const Body& body) {
  CheckRecord rec;
  rec.check = std::move(check);
  rec.input = std::move(input);
  rec.params = std::move(params);
  GroebnerOptions opt = ctx.cfg.budget;
  opt.sink = &rec.gb;
  int64_t t0 = now_ms();
  try {
    body(rec, opt);
  } catch (const BudgetExceeded& e) {
    rec.verdict = Verdict::Inconclusive;
    rec.witness = "budget exceeded after " + std::to_string(e.stats.pairs_generated) + " pairs";
  }
  rec.ms = now_ms() - t0;
  ctx.rep.add(std::move(rec));
}

CheckResult bool_check(bool ok, const std::string& why_false) {
  CheckResult r;
  r.verdict = ok ? Verdict::True : Verdict::False;
  if (!ok) r.detail = why_false;
  return r;
}

// Engine self-check: every S-pair of the reduced basis drops to zero.
CheckResult groebner_selfcheck(const Ideal& I, const GroebnerOptions& opt) {
  const GroebnerBasis& gb = I.groebner(MonomialOrder::degrevlex(), opt);
  return bool_check(verify_groebner(I.vars(), gb), "an s-pair fails to reduce to zero");
}

struct Input {
  std::string id;
  const Arrangement* sigma;
};

unsigned max_multiplicity(const Arrangement& sig) {
  unsigned out = 0;
  for (const auto& wf : sig.support()) out = std::max(out, wf.mult);
  return out;
}

// Catalog slice exercised by the decomposition and resolution suites.
bool in_decomposition_grid(const Arrangement& sig) {
  return sig.vars().size() <= 3 && sig.support().size() <= 5 && max_multiplicity(sig) <= 2 &&
         sig.n() <= 6;
}

bool in_resolution_grid(const Arrangement& sig) {
  return in_decomposition_grid(sig) && sig.n() <= 5;
}

// Arrangements whose powers stay a-fold ideals of the replicated arrangement.
bool in_powers_grid(const Arrangement& sig) {
  return sig.vars().size() == 3 && sig.support().size() == 4;
}

// An explicit arrangement overrides the catalog sweep and its filters.
std::vector<Input> inputs_for(const RunConfig& cfg, bool (*filter)(const Arrangement&)) {
  if (cfg.arrangement) {
    return {{cfg.input_id.empty() ? std::string("input") : cfg.input_id, &*cfg.arrangement}};
  }
  std::vector<Input> out;
  for (const auto& e : catalog())
    if (!filter || filter(e.arrangement)) out.push_back({e.name, &e.arrangement});
  return out;
}

// Requested values intersected with [lo, hi]; empty request means the full
// interval. An arrangement whose interval excludes everything contributes no
// records.
std::vector<long> grid(const std::vector<long>& want, long lo, long hi) {
  std::vector<long> out;
  if (want.empty()) {
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  for (long v : want)
    if (lo <= v && v <= hi) out.push_back(v);
  return out;
}

void suite_decomposition(Ctx& ctx) {
  for (const auto& in : inputs_for(ctx.cfg, in_decomposition_grid)) {
    for (long a : grid(ctx.cfg.a, 1, in.sigma->n())) {
      const Arrangement& sig = *in.sigma;
      push(ctx, "decomposition", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(verify_decomposition(sig, static_cast<unsigned>(a), opt), rec);
      });
      push(ctx, "membership-bound", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(verify_membership_bound(sig, static_cast<unsigned>(a), opt), rec);
      });
      push(ctx, "groebner-selfcheck", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(groebner_selfcheck(fold_ideal(sig, static_cast<unsigned>(a)), opt), rec);
      });
    }
  }
  // The colon, saturation, and expansion identities hold with no size bound;
  // sweep the whole catalog.
  for (const auto& in : inputs_for(ctx.cfg, nullptr)) {
    for (long a : grid(ctx.cfg.a, 1, in.sigma->n())) {
      const Arrangement& sig = *in.sigma;
      push(ctx, "saturation", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(verify_saturation_identity(sig, static_cast<unsigned>(a), opt), rec);
      });
      for (size_t ell = 0; ell < sig.support().size(); ++ell) {
        Params p{{"a", a}, {"l", static_cast<long>(ell)}};
        push(ctx, "colon", in.id, p, [&sig, a, ell](CheckRecord& rec, const GroebnerOptions& opt) {
          apply(verify_colon_claim(sig, static_cast<unsigned>(a), ell, opt), rec);
        });
        push(ctx, "expansion", in.id, p, [&sig, a, ell](CheckRecord& rec, const GroebnerOptions& opt) {
          apply(verify_expansion_identity(sig, static_cast<unsigned>(a), ell, opt), rec);
        });
      }
    }
  }
}

void suite_resolution(Ctx& ctx) {
  for (const auto& in : inputs_for(ctx.cfg, in_resolution_grid)) {
    for (long a : grid(ctx.cfg.a, 1, in.sigma->n())) {
      const Arrangement& sig = *in.sigma;
      push(ctx, "linear-resolution", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        BettiTable table = betti_table(fold_ideal(sig, static_cast<unsigned>(a)), opt);
        std::optional<bool> linear = has_linear_resolution(table);
        apply(bool_check(linear.value_or(false),
                         linear ? "an entry sits off the single allowed diagonal"
                                : "minimal generators mix degrees"),
              rec);
        rec.betti = std::move(table);
      });
      push(ctx, "quotient-regularity", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        int reg = regularity_quotient(betti_table(fold_ideal(sig, static_cast<unsigned>(a)), opt));
        apply(bool_check(reg == a - 1, "reg(R/I) = " + std::to_string(reg) + ", expected " +
                                           std::to_string(a - 1)),
              rec);
      });
      push(ctx, "complex-selfcheck", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        Ideal I = fold_ideal(sig, static_cast<unsigned>(a));
        Resolution raw = free_resolution(I, opt);
        bool ok = check_resolution(raw);
        auto [minimal, table] = minimize(std::move(raw));
        ok = ok && check_resolution(minimal);
        apply(bool_check(ok, "a differential fails d(d(x)) = 0 or misses the augmentation kernel"),
              rec);
      });
      push(ctx, "euler-selfcheck", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        Ideal I = fold_ideal(sig, static_cast<unsigned>(a));
        auto [minimal, table] = minimize(free_resolution(I, opt));
        int dmax = 0;
        for (const auto& [key, count] : table.entries) dmax = std::max(dmax, key.second);
        apply(bool_check(euler_consistent(minimal, I, static_cast<unsigned>(dmax + 1)),
                         "alternating twist counts disagree with the Hilbert function"),
              rec);
      });
    }
  }
}

void suite_powers(Ctx& ctx) {
  for (const auto& in : inputs_for(ctx.cfg, in_powers_grid)) {
    for (long a : grid(ctx.cfg.a, 2, 3)) {
      for (long e : grid(ctx.cfg.e, 1, 2)) {
        const Arrangement& sig = *in.sigma;
        Params p{{"a", a}, {"e", e}};
        push(ctx, "linear-power", in.id, p, [&sig, a, e](CheckRecord& rec, const GroebnerOptions& opt) {
          apply(verify_power_identity(sig, static_cast<unsigned>(a), static_cast<unsigned>(e), opt),
                rec);
        });
        push(ctx, "groebner-selfcheck", in.id, p, [&sig, a, e](CheckRecord& rec, const GroebnerOptions& opt) {
          Ideal power = ideal_power(fold_ideal(sig, static_cast<unsigned>(a)),
                                    static_cast<unsigned>(e));
          apply(groebner_selfcheck(power, opt), rec);
        });
        if (a == 2 && e == 2) {
          push(ctx, "power-regularity", in.id, p, [&sig](CheckRecord& rec, const GroebnerOptions& opt) {
            BettiTable table = betti_table(ideal_power(fold_ideal(sig, 2), 2), opt);
            int reg = regularity_quotient(table);
            apply(bool_check(reg == 3, "reg(R/I^2) = " + std::to_string(reg) + ", expected 3"),
                  rec);
            rec.betti = std::move(table);
          });
        }
      }
    }
  }
}

void rees_light(Ctx& ctx, const std::string& id, const ReesSetup& setup, const Arrangement& sig) {
  push(ctx, "substitution-vanishing", id, {}, [&setup](CheckRecord& rec, const GroebnerOptions&) {
    apply(verify_substitution_vanishing(setup), rec);
  });
  push(ctx, "generator-count", id, {}, [&setup, &sig](CheckRecord& rec, const GroebnerOptions& opt) {
    apply(verify_generator_count(setup, opt), rec);
    rec.items.push_back("mu = " + std::to_string(expected_generator_count(sig)));
  });
}

void rees_heavy(Ctx& ctx, const std::string& id, const ReesSetup& setup) {
  push(ctx, "fiber-presentation", id, {}, [&setup](CheckRecord& rec, const GroebnerOptions& opt) {
    apply(verify_fiber_presentation(setup, opt), rec);
  });
  push(ctx, "fiber-type", id, {}, [&setup](CheckRecord& rec, const GroebnerOptions& opt) {
    apply(verify_fiber_type(setup, opt), rec);
  });
  push(ctx, "low-x-degrees", id, {}, [&setup](CheckRecord& rec, const GroebnerOptions& opt) {
    apply(verify_low_x_degrees(setup, opt), rec);
  });
}

void suite_rees(Ctx& ctx) {
  std::vector<Input> inputs;
  if (ctx.cfg.arrangement) {
    inputs = inputs_for(ctx.cfg, nullptr);
  } else {
    inputs = {{"generic4", catalog_find("generic4")}, {"near_pencil4", catalog_find("near_pencil4")}};
    inputs.push_back({"generic5", catalog_find("generic5")});
  }
  for (const auto& in : inputs) {
    ReesSetup setup = rees_setup(*in.sigma);
    rees_light(ctx, in.id, setup, *in.sigma);
    // The generic5 kernel computations are far heavier than the rest of the
    // suite; they stay behind the opt-in flag.
    if (ctx.cfg.arrangement || in.id != "generic5" || ctx.cfg.include_generic5)
      rees_heavy(ctx, in.id, setup);
  }
}

std::string star_label(const Arrangement& sig) {
  for (const auto& e : catalog())
    if (&e.arrangement == &sig) return e.name;
  return "input";
}

void star_cell(Ctx& ctx, const std::string& id, const Arrangement& sig, long N, long s) {
  for (long c : grid(ctx.cfg.c, 2, N)) {
    Params base{{"N", N}, {"s", s}, {"c", c}};
    for (long m : grid(ctx.cfg.m, 1, 4)) {
      Params p = base;
      p.emplace_back("m", m);
      push(ctx, "star-alpha", id, p, [&sig, c, m](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(verify_alpha(sig, static_cast<unsigned>(c), static_cast<unsigned>(m), opt), rec);
      });
    }
    push(ctx, "generation-degree", id, base, [&sig, c](CheckRecord& rec, const GroebnerOptions& opt) {
      apply(verify_generation_degree(sig, static_cast<unsigned>(c), opt), rec);
    });
    for (long m : grid(ctx.cfg.m, 1, 2)) {
      Params p = base;
      p.emplace_back("m", m);
      for (int which : {1, 2, 3}) {
        push(ctx, "containment-" + std::to_string(which), id, p,
             [&sig, c, m, which](CheckRecord& rec, const GroebnerOptions& opt) {
               apply(containment_check(sig, static_cast<unsigned>(c), static_cast<unsigned>(m),
                                       which, opt),
                     rec);
             });
      }
      push(ctx, "power-decomposition", id, p, [&sig, c, m](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(power_decomposition_check(sig, static_cast<unsigned>(c), static_cast<unsigned>(m), opt),
              rec);
      });
    }
    long t_max = ctx.cfg.t.empty() ? 10 : *std::max_element(ctx.cfg.t.begin(), ctx.cfg.t.end());
    long m_max = ctx.cfg.m.empty() ? 10 : *std::max_element(ctx.cfg.m.begin(), ctx.cfg.m.end());
    for (int which : {4, 5, 6}) {
      Params p = base;
      p.emplace_back("t_max", t_max);
      p.emplace_back("m_max", m_max);
      push(ctx, "alpha-inequality-" + std::to_string(which), id, p,
           [&, s, c, N, t_max, m_max, which](CheckRecord& rec, const GroebnerOptions&) {
             auto rows = inequality_sweep(static_cast<unsigned>(s), static_cast<unsigned>(c),
                                          static_cast<unsigned>(N), static_cast<unsigned>(t_max),
                                          static_cast<unsigned>(m_max), which);
             const SweepRow* bad = nullptr;
             for (const auto& row : rows)
               if (!row.holds) {
                 bad = &row;
                 break;
               }
             apply(bool_check(!bad, bad ? "t=" + std::to_string(bad->t) + " m=" +
                                              std::to_string(bad->m) + ": " + to_string(bad->lhs) +
                                              " < " + to_string(bad->rhs)
                                        : ""),
                   rec);
             rec.items.push_back(std::to_string(rows.size()) + " rows");
           });
    }
    push(ctx, "groebner-selfcheck", id, base, [&sig, c](CheckRecord& rec, const GroebnerOptions& opt) {
      apply(groebner_selfcheck(star_ideal(sig, static_cast<unsigned>(c), opt), opt), rec);
    });
  }
}

void suite_star(Ctx& ctx) {
  if (ctx.cfg.arrangement) {
    const Arrangement& sig = *ctx.cfg.arrangement;
    long N = static_cast<long>(sig.vars().size()) - 1;
    long s = static_cast<long>(sig.support().size());
    star_cell(ctx, ctx.cfg.input_id.empty() ? std::string("input") : ctx.cfg.input_id, sig, N, s);
    return;
  }
  for (long N : grid(ctx.cfg.N, 2, 3)) {
    for (long s : grid(ctx.cfg.s, N + 1, 5)) {
      const Arrangement& sig = star_arrangement(static_cast<unsigned>(N), static_cast<unsigned>(s));
      star_cell(ctx, star_label(sig), sig, N, s);
    }
  }
}

void run_verify(Ctx& ctx, const std::string& suite) {
  if (suite == "decomposition") return suite_decomposition(ctx);
  if (suite == "resolution") return suite_resolution(ctx);
  if (suite == "powers") return suite_powers(ctx);
  if (suite == "rees") return suite_rees(ctx);
  if (suite == "star") return suite_star(ctx);
  if (suite == "all") {
    suite_decomposition(ctx);
    suite_resolution(ctx);
    suite_powers(ctx);
    suite_rees(ctx);
    suite_star(ctx);
    return;
  }
  throw StructuralError("unknown suite: " + suite);
}

void verb_decompose(Ctx& ctx) {
  for (const auto& in : inputs_for(ctx.cfg, nullptr)) {
    for (long a : grid(ctx.cfg.a, 1, in.sigma->n())) {
      const Arrangement& sig = *in.sigma;
      push(ctx, "decompose", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        apply(verify_decomposition(sig, static_cast<unsigned>(a), opt), rec);
      });
    }
  }
}

void verb_betti(Ctx& ctx) {
  for (const auto& in : inputs_for(ctx.cfg, nullptr)) {
    for (long a : grid(ctx.cfg.a, 1, in.sigma->n())) {
      const Arrangement& sig = *in.sigma;
      push(ctx, "betti", in.id, {{"a", a}}, [&sig, a](CheckRecord& rec, const GroebnerOptions& opt) {
        Ideal I = fold_ideal(sig, static_cast<unsigned>(a));
        Resolution raw = free_resolution(I, opt);
        bool ok = check_resolution(raw);
        auto [minimal, table] = minimize(std::move(raw));
        ok = ok && check_resolution(minimal);
        int dmax = 0;
        for (const auto& [key, count] : table.entries) dmax = std::max(dmax, key.second);
        ok = ok && euler_consistent(minimal, I, static_cast<unsigned>(dmax + 1));
        apply(bool_check(ok, "resolution failed its own consistency checks"), rec);
        rec.betti = std::move(table);
      });
    }
  }
}

void verb_rees_gens(Ctx& ctx) {
  std::vector<Input> inputs = ctx.cfg.arrangement
                                  ? inputs_for(ctx.cfg, nullptr)
                                  : std::vector<Input>{{"generic4", catalog_find("generic4")},
                                                       {"near_pencil4", catalog_find("near_pencil4")}};
  for (const auto& in : inputs) {
    const Arrangement& sig = *in.sigma;
    push(ctx, "rees-generators", in.id, {}, [&sig](CheckRecord& rec, const GroebnerOptions& opt) {
      ReesSetup setup = rees_setup(sig);
      std::vector<Polynomial> gens = rees_minimal_generators(setup, opt);
      bool low = true;
      for (const auto& [bd, count] : bidegree_histogram(Ideal(setup.xt, gens))) {
        rec.items.push_back("bidegree (" + std::to_string(bd.first) + ", " +
                            std::to_string(bd.second) + "): " + std::to_string(count));
        if (bd.first >= 2) low = false;
      }
      for (const auto& g : gens) rec.items.push_back(g.format());
      rec.params.emplace_back("count", static_cast<long>(gens.size()));
      apply(bool_check(low, "a minimal generator has degree two or more in the forms"), rec);
    });
  }
}

void verb_alpha(Ctx& ctx) {
  for (const auto& in : inputs_for(ctx.cfg, nullptr)) {
    const Arrangement& sig = *in.sigma;
    long N = static_cast<long>(sig.vars().size()) - 1;
    long s = static_cast<long>(sig.support().size());
    for (long c : grid(ctx.cfg.c, 2, N)) {
      for (long m : grid(ctx.cfg.m, 1, 4)) {
        push(ctx, "alpha", in.id, {{"c", c}, {"m", m}},
             [&sig, s, c, m](CheckRecord& rec, const GroebnerOptions& opt) {
               auto engine = alpha_invariant(
                   symbolic_power(sig, static_cast<unsigned>(c), static_cast<unsigned>(m), opt), opt);
               long formula = alpha_formula(s, c, m);
               bool ok = engine && static_cast<long>(*engine) == formula;
               apply(bool_check(ok, "engine disagrees with the closed form"), rec);
               rec.items.push_back("alpha = " +
                                   (engine ? std::to_string(*engine) : std::string("none")));
               rec.items.push_back("formula = " + std::to_string(formula));
             });
      }
    }
  }
}

}  // namespace

std::vector<long> parse_range_spec(const std::string& spec) {
  if (spec.empty() || spec == "all") return {};
  auto parse_long = [&](const std::string& txt) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(txt, &used);
    } catch (const std::exception&) {
      throw StructuralError("bad range: " + spec);
    }
    if (used != txt.size()) throw StructuralError("bad range: " + spec);
    return v;
  };
  size_t dots = spec.find("..");
  if (dots == std::string::npos) return {parse_long(spec)};
  long lo = parse_long(spec.substr(0, dots));
  long hi = parse_long(spec.substr(dots + 2));
  if (lo > hi) throw StructuralError("empty range: " + spec);
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Report run(const RunConfig& cfg) {
  Report rep;
  Ctx ctx{cfg, rep};
  if (cfg.verb == "verify")
    run_verify(ctx, cfg.suite);
  else if (cfg.verb == "decompose")
    verb_decompose(ctx);
  else if (cfg.verb == "betti")
    verb_betti(ctx);
  else if (cfg.verb == "rees-gens")
    verb_rees_gens(ctx);
  else if (cfg.verb == "alpha")
    verb_alpha(ctx);
  else
    throw StructuralError("unknown verb: " + cfg.verb);
  if (rep.records.empty()) throw StructuralError("the requested grid selects no checks");
  rep.sort();
  return rep;
}

}  // namespace afold
