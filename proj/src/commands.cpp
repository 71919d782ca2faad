#include "loopnr/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "loopnr/decomp.hpp"

namespace loopnr {

using nlohmann::json;

namespace {

constexpr std::size_t kListLimit = 64;  // larger subset families are summarized by count

json elems(const ElementSubset& s) { return s.members(); }

json subsets(const std::vector<ElementSubset>& family) {
  json out = json::array();
  for (const auto& s : family) out.push_back(s.members());
  return out;
}

json violation_json(const Violation& v) {
  return json{{"kind", std::string(to_string(v.kind))}, {"witness", v.witness}, {"detail", v.detail}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json signature_json(const CornerSignature& s) {
  return json{{"size", s.size}, {"units", s.units}, {"idempotents", s.idempotents}, {"hash", hex64(s.hash)}};
}

json structure_json(const Structure& s) {
  return json{{"name", s.name}, {"kind", std::string(to_string(s.kind))}, {"n", s.loop.size()},
              {"hash", structure_hash(s)}};
}

std::string emit(const json& report, bool text) { return text ? render_text(report) : report.dump() + "\n"; }

// Runs one report section. An explicitly requested section lets its error
// propagate (and so sets the exit code); in run-everything mode the error is
// recorded in place of the section.
template <class F>
void section(json& report, const char* key, bool explicit_request, F&& fill) {
  if (explicit_request) {
    report[key] = fill();
    return;
  }
  try {
    report[key] = fill();
  } catch (const BoundExceeded& e) {
    report[key] = json{{"skipped", e.what()}};
  } catch (const PreconditionFailed& e) {
    report[key] = json{{"skipped", e.what()}};
  }
}

const FiniteRing& require_ring(const Structure& s) {
  if (!s.ring) throw PreconditionFailed("structure is a ring");
  return *s.ring;
}

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kExitParse, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const json::exception& e) {
    return {kExitParse, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return {kExitInvalid, "", std::string("invalid: ") + e.what() + "\n"};
  } catch (const BoundExceeded& e) {
    return {kExitBound, "", std::string(e.what()) + "\n"};
  } catch (const PreconditionFailed& e) {
    std::string msg = std::string(e.what());
    if (!e.witness().empty()) {
      msg += " (witness";
      for (Elem w : e.witness()) msg += " " + std::to_string(w);
      msg += ")";
    }
    return {kExitHypothesis, "", msg + "\n"};
  } catch (const TheoremFalsified& e) {
    return {kExitInternal, "", std::string("internal consistency failure: ") + e.what() + "\n"};
  }
}

json loop_subloops(const CayleyLoop& loop, const Limits& limits) {
  const auto all = enumerate_subloops(loop, limits);
  std::size_t normal = 0;
  for (const auto& k : all) normal += is_normal_subloop(loop, k);
  json out{{"count", all.size()}, {"normal_count", normal}};
  if (all.size() <= kListLimit) out["members"] = subsets(all);
  return out;
}

json locality_json(const Structure& s, const Limits& limits) {
  const auto& nr = *s.nr;
  if (!nr.zero_symmetric()) throw PreconditionFailed("near-ring is zero-symmetric");
  const auto rep = is_local_lnr(nr, limits);
  json out{{"local", rep.local()},
           {"via_maximal", rep.via_maximal},
           {"via_units", rep.via_units},
           {"maximal_count", rep.maximal.size()},
           {"maximal", subsets(rep.maximal)},
           {"n_subloop_count", rep.n_subloop_count},
           {"unit_count", rep.unit_count},
           {"non_unit_count", rep.non_units.size()},
           {"radical", rep.radical ? elems(*rep.radical) : json(nullptr)}};
  if (s.ring) {
    const bool ring_local = is_local_ring(*s.ring, limits);
    if (ring_local != rep.local()) throw TheoremFalsified("ring and near-ring locality disagree");
    out["ring_local"] = ring_local;
  }
  return out;
}

json radical_json(const FiniteRing& ring, const Limits& limits) {
  const auto by_units = radical_by_quasi_regularity(ring);
  const auto by_ideals = radical_by_maximal_left_ideals(ring, limits);
  const auto j = jacobson_radical(ring, limits);
  const auto q = quotient_ring(ring, j);
  return json{{"members", elems(j.members)},
              {"by_quasi_regularity", elems(by_units)},
              {"by_maximal_left_ideals", elems(by_ideals)},
              {"agree", by_units == by_ideals},
              {"quotient_size", q.ring.size()},
              {"semisimple", j.members.size() == 1},
              {"semiperfect", is_semiperfect(ring, limits)}};
}

}  // namespace

std::string payload_hash(const json& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return hex64(h);
}

Structure load_structure(const std::string& path_or_spec, const Limits& limits) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_spec, ec)) {
    auto file = read_structure_file(path_or_spec);
    if (!file.meta.contains("name")) file.meta["name"] = std::filesystem::path(path_or_spec).filename().string();
    return build_structure(file, limits);
  }
  return generate(path_or_spec, limits);
}

json analysis_report(const Structure& s, const AnalyzeOptions& options, const Limits& limits) {
  require_within("structure size", s.loop.size(), limits.max_n);
  const bool all = options.all();
  json report;
  report["structure"] = structure_json(s);
  json validation{{"valid", true},
                  {"associative_addition", is_associative(s.loop)},
                  {"commutative_addition", is_commutative(s.loop)}};
  if (s.nr) {
    validation["zero_symmetric"] = s.nr->zero_symmetric();
    validation["ring"] = s.ring.has_value();
  }
  report["validation"] = validation;

  if (all || options.subloops) {
    section(report, "subloops", options.subloops, [&] { return loop_subloops(s.loop, limits); });
    if (s.nr)
      section(report, "n_subloops", options.subloops, [&] {
        const auto lattice = enumerate_N_subloops(*s.nr, limits);
        const auto maximal = maximal_proper(lattice);
        json out{{"count", lattice.size()}, {"maximal_count", maximal.size()}, {"maximal", subsets(maximal)}};
        if (lattice.size() <= kListLimit) out["members"] = subsets(lattice);
        return out;
      });
  }
  if (s.nr && (all || options.idempotents)) {
    const auto u = units(*s.nr);
    const auto idem = idempotents(*s.nr);
    report["units"] = json{{"count", u.members.size()}, {"members", elems(u.members)}};
    report["idempotents"] = json{{"count", idem.size()}, {"members", elems(idem)}};
  }
  if (all || options.local) {
    if (!s.nr) {
      if (options.local) throw PreconditionFailed("structure is a near-ring");
    } else {
      section(report, "locality", options.local, [&] { return locality_json(s, limits); });
    }
  }
  if (all || options.radical) {
    if (!s.ring) {
      if (options.radical) throw PreconditionFailed("structure is a ring");
    } else {
      section(report, "radical", options.radical, [&] { return radical_json(*s.ring, limits); });
    }
  }
  if (all && s.ring) {
    section(report, "decomposition", false, [&] {
      const auto family = decompose_regular(*s.ring, limits);
      return json{{"family", family.members}, {"length", family.members.size()}};
    });
  }
  return report;
}

json decomposition_report(const Structure& s, const DecomposeOptions& options, const Limits& limits) {
  const auto& ring = require_ring(s);
  json report;
  report["structure"] = structure_json(s);
  const auto family = decompose_regular(ring, limits);
  report["family"] = family.members;
  report["length"] = family.members.size();
  json corners = json::array();
  for (Elem e : family.members) {
    const auto corner = corner_ring(ring, e);
    json c{{"idempotent", e},
           {"size", corner.carrier.size()},
           {"primitive", is_primitive(ring, e)},
           {"strongly_indecomposable", is_strongly_indecomposable_corner(ring, e, limits)},
           {"signature", signature_json(corner_signature(corner.ring))}};
    if (corner.carrier.size() <= kListLimit) c["carrier"] = corner.carrier;
    corners.push_back(std::move(c));
  }
  report["corners"] = std::move(corners);

  if (options.verify_uniqueness) {
    const auto ks = verify_ks_uniqueness(ring, limits);
    json sigs = json::array();
    for (const auto& sig : ks.signatures) sigs.push_back(signature_json(sig));
    report["uniqueness"] = json{{"families", ks.family_count},
                                {"truncated", ks.truncated},
                                {"lengths_equal", ks.lengths_equal},
                                {"isomorphism_matched", ks.isomorphism_matched},
                                {"conjugacy_matched", ks.conjugacy_matched},
                                {"signatures", std::move(sigs)}};
    const auto retracts = verify_retract_matching(ring, limits);
    json matches = json::array();
    for (const auto& [f, e] : retracts.matches) matches.push_back({f, e});
    report["retracts"] = json{{"primitive_count", retracts.primitive_count}, {"matches", std::move(matches)}};
  }
  return report;
}

CommandResult cmd_check(const std::string& path, const Limits& limits) {
  return guarded([&]() -> CommandResult {
    const auto text = read_text_file(path);
    StructureFile file;
    json report;
    try {
      file = parse_structure_file(text);
    } catch (const ValidationError& e) {
      // Shape errors are axiom violations of the table itself.
      report["valid"] = false;
      report["violations"] = json::array({violation_json(e.violation())});
      return {kExitInvalid, report.dump() + "\n", std::string("invalid: ") + e.what() + "\n"};
    }
    require_within("structure size", file.n(), limits.max_n);
    const auto found = file_violations(file, limits);
    report["kind"] = std::string(to_string(file.kind));
    report["n"] = file.n();
    report["valid"] = found.empty();
    report["violations"] = json::array();
    for (const auto& v : found) report["violations"].push_back(violation_json(v));
    CommandResult r{found.empty() ? kExitOk : kExitInvalid, report.dump() + "\n", ""};
    for (const auto& v : found) r.err += "invalid: " + describe(v) + "\n";
    return r;
  });
}

CommandResult cmd_analyze(const std::string& path_or_spec, const AnalyzeOptions& options, const Limits& limits) {
  return guarded([&]() -> CommandResult {
    const auto start = std::chrono::steady_clock::now();
    const auto s = load_structure(path_or_spec, limits);
    json report = analysis_report(s, options, limits);
    report["report_hash"] = payload_hash(report);
    if (options.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timing"] = json{{"total_ms", std::chrono::duration<double, std::milli>(elapsed).count()},
                              {"threads", limits.threads}};
    }
    return {kExitOk, emit(report, options.text), ""};
  });
}

CommandResult cmd_decompose(const std::string& path_or_spec, const DecomposeOptions& options, const Limits& limits) {
  return guarded([&]() -> CommandResult {
    const auto s = load_structure(path_or_spec, limits);
    json report = decomposition_report(s, options, limits);
    report["report_hash"] = payload_hash(report);
    return {kExitOk, emit(report, options.text), ""};
  });
}

CommandResult cmd_hom(const std::string& source, const std::string& target, const std::string& map_path,
                      const HomOptions& options, const Limits& limits) {
  return guarded([&]() -> CommandResult {
    const auto src = load_structure(source, limits);
    const auto dst = load_structure(target, limits);
    auto map = parse_element_map(read_text_file(map_path));
    json report;
    report["source"] = structure_json(src);
    report["target"] = structure_json(dst);

    if (!src.nr || !dst.nr) {
      const auto f = validate_loop_hom(std::move(map), src.loop, dst.loop);
      report["valid"] = true;
      report["kind"] = "loop";
      report["kernel"] = elems(f.kernel());
      report["image"] = elems(f.image());
      report["kernel_normal"] = is_normal_subloop(src.loop, f.kernel());
      report["report_hash"] = payload_hash(report);
      return {kExitOk, emit(report, options.text), ""};
    }

    const auto f = validate_lnr_hom(std::move(map), *src.nr, *dst.nr);
    report["valid"] = true;
    report["kind"] = "lnr";
    report["nontrivial"] = f.nontrivial();
    const auto reflect = is_unit_reflecting(f);
    const auto lift = is_idempotent_lifting(f);
    report["unit_reflecting"] = reflect.holds;
    report["unit_reflecting_witness"] = reflect.witness ? json(*reflect.witness) : json(nullptr);
    report["idempotent_lifting"] = lift.holds;
    report["idempotent_lifting_witness"] = lift.witness ? json(*lift.witness) : json(nullptr);
    report["kernel"] = elems(f.kernel());
    report["image"] = elems(f.image());
    if (reflect.holds) report["nonzero_idempotents_survive"] = idempotent_kill_check(f);
    if (options.transfer) {
      const auto t = verify_local_transfer(f, limits);
      report["transfer"] = json{{"source_local", t.source_local},
                                {"image_local", t.image_local},
                                {"target_local", t.target_local},
                                {"agree", t.agree()},
                                {"image_size", t.image_size},
                                {"source_units", t.source_units},
                                {"image_units", t.image_units},
                                {"target_units", t.target_units},
                                {"unit_reflecting_onto_image", t.unit_reflecting_onto_image},
                                {"converse_via_target_holds", t.converse_via_target_holds}};
    }
    report["report_hash"] = payload_hash(report);
    return {kExitOk, emit(report, options.text), ""};
  });
}

CommandResult cmd_generate(const std::string& spec, const Limits& limits) {
  return guarded([&]() -> CommandResult {
    const auto s = generate(spec, limits);
    const json meta{{"name", s.name}, {"provenance", "generated"}};
    return {kExitOk, serialize_structure_file(to_structure_file(s, meta)), ""};
  });
}

CommandResult cmd_catalog(bool text) {
  json list = json::array();
  for (const auto& e : catalog())
    list.push_back(json{{"name", e.name}, {"spec", e.spec}, {"description", e.description}});
  if (!text) return {kExitOk, list.dump() + "\n", ""};
  std::ostringstream os;
  for (const auto& e : catalog()) os << e.name << "\t" << e.spec << "\t" << e.description << "\n";
  return {kExitOk, os.str(), ""};
}

std::string render_text(const json& report) {
  std::ostringstream os;
  auto scalar_like = [](const json& v) {
    if (!v.is_structured()) return true;
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_object()) return false;
    return true;
  };
  auto line = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto walk = [&](auto&& self, const json& node, int depth) -> void {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) {
        if (scalar_like(value)) {
          os << pad << key << ": " << line(value) << "\n";
        } else {
          os << pad << key << ":\n";
          self(self, value, depth + 1);
        }
      }
    } else if (node.is_array()) {
      for (std::size_t i = 0; i < node.size(); ++i) {
        os << pad << "[" << i << "]\n";
        self(self, node[i], depth + 1);
      }
    } else {
      os << pad << line(node) << "\n";
    }
  };
  walk(walk, report, 0);
  return os.str();
}

}  // namespace loopnr
