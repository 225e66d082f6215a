#include "expmap/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "expmap/decompose.hpp"
#include "expmap/error.hpp"
#include "expmap/instance.hpp"
#include "expmap/invariants.hpp"
#include "expmap/parse.hpp"

namespace expmap::cli {
namespace {

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// Raised for anything wrong with the user's input; maps to exit code 2.
struct InputError {
  std::string message;
};

struct Options {
  std::string file;
  std::optional<int> maxdeg;
  std::string element;
};

Instance load(const Options& opts) {
  try {
    return load_instance(opts.file);
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
}

DegreeWindow window_of(const Instance& inst, const Options& opts) {
  const int d = opts.maxdeg.value_or(static_cast<int>(inst.window));
  if (d < 1) throw InputError{"--maxdeg must be at least 1"};
  return DegreeWindow(static_cast<std::uint32_t>(d));
}

void print_header(const Instance& inst, std::ostream& out) {
  out << "field: " << inst.ring->field().to_string() << "\n";
  out << "vars:";
  for (const std::string& v : inst.ring->vars()) out << ' ' << v;
  out << "\n";
  for (std::size_t j = 0; j < inst.ring->nvars(); ++j) {
    out << "sigma(" << inst.ring->vars()[j] << ") = " << inst.map.image(j).to_string() << "\n";
  }
}

// Prints the per-generator verdicts; returns the summary failure line, if any.
std::optional<std::string> report_validation(const Instance& inst, std::ostream& out) {
  const ValidationReport report = validate(inst.map);
  for (const GeneratorVerdict& g : report.generators) {
    out << "generator " << g.name << ": E1 " << verdict(g.check.e1) << ", E2 " << verdict(g.check.e2);
    if (!g.check.e1) out << ", E1 discrepancy " << g.check.e1_discrepancy.to_string();
    if (!g.check.e2) out << ", E2 discrepancy " << g.check.e2_discrepancy.to_string();
    out << "\n";
  }
  out << "note: " << report.justification << "\n";
  if (report.valid) return std::nullopt;
  for (const GeneratorVerdict& g : report.generators) {
    if (!g.check.e1) return "INVALID: E1 fails at generator " + g.name;
    if (!g.check.e2) return "INVALID: E2 fails at generator " + g.name;
  }
  return "INVALID";
}

// Common prelude for commands that need a valid map.
bool require_valid(const Instance& inst, std::ostream& out) {
  const ValidationReport report = validate(inst.map);
  if (report.valid) return true;
  for (const GeneratorVerdict& g : report.generators) {
    if (!g.check.e1) {
      out << "INVALID: E1 fails at generator " << g.name << "\n";
      return false;
    }
    if (!g.check.e2) {
      out << "INVALID: E2 fails at generator " << g.name << "\n";
      return false;
    }
  }
  return false;
}

int cmd_validate(const Options& opts, std::ostream& out) {
  const Instance inst = load(opts);
  print_header(inst, out);
  if (auto failure = report_validation(inst, out)) {
    out << *failure << "\n";
    return kMathFailure;
  }
  out << "VALID\n";
  return kSuccess;
}

int cmd_invariants(const Options& opts, std::ostream& out) {
  const Instance inst = load(opts);
  const DegreeWindow window = window_of(inst, opts);
  if (!require_valid(inst, out)) return kMathFailure;
  for (const MPoly& b : invariant_basis(inst.map, window)) out << b.to_string() << "\n";
  return kSuccess;
}

int cmd_slices(const Options& opts, std::ostream& out) {
  const Instance inst = load(opts);
  const DegreeWindow window = window_of(inst, opts);
  if (!require_valid(inst, out)) return kMathFailure;
  if (!is_nontrivial(inst.map)) {
    out << "TRIVIAL MAP\n";
    return kMathFailure;
  }
  const LocalSlices found = find_local_slices(inst.map, window);
  out << "m_star: " << found.m_star << " (window-minimal, maxdeg " << window.max_degree << ")\n";
  for (const SliceRecord& s : found.slices) {
    out << "slice: " << s.element.to_string() << "; lc: " << s.lc.to_string() << "\n";
  }
  const MinimalSliceResult minimal = minimal_local_slice(inst.map, window);
  for (const MPoly& p : minimal.samples) out << "plinth: " << p.to_string() << "\n";
  if (minimal.slice) {
    out << "minimal slice: " << minimal.slice->element.to_string() << "; lc: " << minimal.slice->lc.to_string()
        << " (window-minimal)\n";
  } else {
    out << "minimal slice: INCONCLUSIVE\n";
    for (std::size_t i = 0; i < found.slices.size(); ++i) {
      out << "divides[" << found.slices[i].lc.to_string() << "]:";
      for (std::size_t j = 0; j < minimal.samples.size(); ++j) {
        out << ' ' << minimal.samples[j].to_string() << '=' << (minimal.divides[i][j] ? "yes" : "no");
      }
      out << "\n";
    }
  }
  return kSuccess;
}

const MPoly& require_slice(const Instance& inst) {
  if (!inst.slice) throw InputError{"instance has no 'slice' entry"};
  return *inst.slice;
}

// The given slice must reach the window-minimal sigma-degree.
std::optional<SliceRecord> checked_slice(const Instance& inst, DegreeWindow window, std::ostream& out) {
  const MPoly& s = require_slice(inst);
  if (s.is_zero() || inst.map.is_invariant(s)) {
    out << "NotALocalSlice: " << s.to_string() << " is invariant\n";
    return std::nullopt;
  }
  SliceRecord rec = make_slice_record(inst.map, s);
  const LocalSlices found = find_local_slices(inst.map, window);
  if (rec.deg_sigma > found.m_star) {
    out << "NotALocalSlice: deg_sigma(" << s.to_string() << ") = " << rec.deg_sigma
        << " exceeds the window minimum " << found.m_star << "\n";
    return std::nullopt;
  }
  out << "slice: " << s.to_string() << "\n";
  out << "lc: " << rec.lc.to_string() << "\n";
  out << "deg_sigma(slice): " << rec.deg_sigma << "\n";
  return rec;
}

int cmd_decompose(const Options& opts, std::ostream& out) {
  const Instance inst = load(opts);
  const DegreeWindow window = window_of(inst, opts);
  require_slice(inst);
  MPoly f(inst.ring);
  try {
    f = parse_poly(opts.element, inst.ring);
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
  if (f.is_zero()) throw InputError{"--element must be nonzero"};
  if (!require_valid(inst, out)) return kMathFailure;
  if (!is_nontrivial(inst.map)) {
    out << "TRIVIAL MAP\n";
    return kMathFailure;
  }
  const std::optional<SliceRecord> rec = checked_slice(inst, window, out);
  if (!rec) return kMathFailure;

  out << "element: " << f.to_string() << "\n";
  Decomposition dec = rec->lc.is_one() ? decompose_with_slice(inst.map, rec->element, f)
                                       : decompose_localized(inst.map, *rec, f);
  out << "method: " << (rec->lc.is_one() ? "slice" : "localized") << "\n";
  if (!inst.factors.empty()) {
    try {
      dec = reduce_denominator(inst.map, dec, inst.factors);
    } catch (const HypothesisViolation& hv) {
      out << "HypothesisViolation: coefficient " << hv.coefficient() << " is not divisible by factor "
          << hv.factor() << "\n";
      return kMathFailure;
    }
  }
  out << dec.serialize();
  const bool ok = dec.round_trips(f);
  out << "round-trip: " << verdict(ok) << "\n";
  return ok ? kSuccess : kMathFailure;
}

const char* domain_source(DomainSource s) {
  switch (s) {
    case DomainSource::Checked: return "checked";
    case DomainSource::Asserted: return "asserted";
    case DomainSource::Missing: return "not asserted";
  }
  return "";
}

int cmd_verify(const Options& opts, std::ostream& out) {
  const Instance inst = load(opts);
  const DegreeWindow window = window_of(inst, opts);
  require_slice(inst);
  if (!require_valid(inst, out)) return kMathFailure;
  if (!is_nontrivial(inst.map)) {
    out << "TRIVIAL MAP\n";
    return kMathFailure;
  }
  const std::optional<SliceRecord> rec = checked_slice(inst, window, out);
  if (!rec) return kMathFailure;

  const HypothesisReport hyp =
      check_theorem_main_hypotheses(inst.map, *rec, inst.factors, window, inst.domain_assertions);
  out << "HYPOTHESES: " << verdict(hyp.pass);
  if (inst.factors.empty()) out << " (unit lc, no factors)";
  out << "\n";
  std::optional<std::string> first_failure;
  for (std::size_t i = 0; i < hyp.factors.size(); ++i) {
    const FactorReport& f = hyp.factors[i];
    out << "factor[" << i + 1 << "]: " << f.factor.to_string() << "; invariant " << verdict(f.invariant)
        << "; divides lc " << verdict(f.divides_lc) << "; residue field " << verdict(f.residue_is_base_field)
        << "; domain " << verdict(f.domain) << " (" << domain_source(f.domain_source) << ")"
        << "; slice not invariant mod factor " << verdict(f.slice_not_invariant_mod_factor) << "\n";
    if (!f.ok() && !first_failure) {
      first_failure = "hypothesis for factor " + std::to_string(i + 1) + " (" + f.factor.to_string() + ")";
    }
  }

  const VerificationReport ver = verify_polynomial_ring(inst.map, rec->element, inst.factors, window);
  for (const MonomialVerdict& m : ver.monomials) {
    out << "monomial " << m.text << ": " << verdict(m.pass);
    if (!m.pass) out << " (" << m.failure << ")";
    out << "\n";
    if (!m.pass && !first_failure) first_failure = "monomial " + m.text;
  }
  out << "MONOMIALS: " << ver.monomials_passed << "/" << ver.monomials.size() << " "
      << verdict(ver.monomials_passed == ver.monomials.size()) << "\n";
  out << "INDEPENDENCE: " << ver.independence_passed << "/" << ver.independence_trials << " "
      << verdict(ver.independence_passed == ver.independence_trials) << "\n";
  if (!first_failure && !ver.pass()) first_failure = "independence check";
  if (first_failure) {
    out << "FAILED: first failure at " << *first_failure << "\n";
    return kMathFailure;
  }
  out << "VERIFIED\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential maps on polynomial rings: validation, invariants, slices, decompositions", "expmap"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", opts.file, "instance file")->required();
    sub->add_option("--maxdeg", opts.maxdeg, "degree window D (overrides the instance's window)");
  };
  CLI::App* validate_cmd = app.add_subcommand("validate", "check (E1) and (E2) on the generators");
  validate_cmd->add_option("instance", opts.file, "instance file")->required();
  CLI::App* invariants_cmd = app.add_subcommand("invariants", "basis of invariants of degree <= D");
  add_common(invariants_cmd);
  CLI::App* slices_cmd = app.add_subcommand("slices", "local slices, plinth sample, minimal slice");
  add_common(slices_cmd);
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "write an element as a polynomial in the slice");
  add_common(decompose_cmd);
  decompose_cmd->add_option("--element", opts.element, "element to decompose")->required();
  CLI::App* verify_cmd = app.add_subcommand("verify", "check the hypotheses and the polynomial-ring structure");
  add_common(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opts, out);
    if (invariants_cmd->parsed()) return cmd_invariants(opts, out);
    if (slices_cmd->parsed()) return cmd_slices(opts, out);
    if (decompose_cmd->parsed()) return cmd_decompose(opts, out);
    if (verify_cmd->parsed()) return cmd_verify(opts, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n";
    return kInputError;
  } catch (const Error& e) {
    out << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}

}  // namespace expmap::cli
