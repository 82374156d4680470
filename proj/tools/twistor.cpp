/*
   Copyright 2026 The twistor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// twistor: command-line front end over the library.
//
// Exit codes: 0 success, 2 input error, 3 theorem-level assertion failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistor/bundles/birkhoff.hpp"
#include "twistor/bundles/sheaf.hpp"
#include "twistor/complexes/complexes.hpp"
#include "twistor/error.hpp"
#include "twistor/io/json.hpp"
#include "twistor/moduli/moduli.hpp"
#include "twistor/mts/mts.hpp"
#include "twistor/realstruct/realstruct.hpp"
#include "twistor/rees/rees.hpp"
#include "twistor/suite/suite.hpp"

namespace tw = twistor;
namespace io = twistor::io;
using io::Json;

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string field = "rational";
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

struct Report {
    std::string text;
    Json json;
};

/// Input document of the current command, dumped on a theorem violation.
Json g_input;

tw::Field field_of(const Options& o) { return o.field == "gaussian" ? tw::Field::gaussian : tw::Field::rational; }

Json load(const Options& o) {
    if (o.input.empty()) throw tw::Error("no input document (pass a file or --input)");
    g_input = io::read_document_file(o.input);
    return g_input;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
    return out;
}

std::string int_list(const std::vector<int>& v) {
    std::vector<std::string> xs;
    for (int x : v) xs.push_back(std::to_string(x));
    return "[" + join(xs, ", ") + "]";
}

template <class M>
std::string matrix_text(const M& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back("[" + join(row, ", ") + "]");
    }
    return "[" + join(rows, ", ") + "]";
}

std::string forms_text(const std::vector<tw::BinaryForm>& fs) {
    std::vector<std::string> xs;
    for (const auto& f : fs) xs.push_back(f.to_string());
    return "[" + join(xs, ", ") + "]";
}

std::vector<int> parse_degrees(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != item.size()) throw tw::Error("malformed integer list '" + s + "'");
        out.push_back(v);
    }
    if (out.empty()) throw tw::Error("empty integer list");
    return out;
}

// MTS reports.

void describe_mts(const tw::MixedTwistorStructure& m, Report& r, const std::string& indent = "") {
    tw::MtsReport v = tw::validate_mts(m);
    if (v.valid)
        r.text += indent + "valid\n";
    else
        r.text += indent + "invalid at weight " + std::to_string(*v.first_invalid) + "\n";
    Json graded = Json::array();
    for (const auto& p : v.pieces) {
        r.text += indent + "gr " + std::to_string(p.weight) + ": " + p.gr.to_string() + (p.pure ? "" : " not pure") + "\n";
        graded.push_back({{"weight", p.weight}, {"gr", p.gr.degrees()}, {"pure", p.pure}});
    }
    r.json = {{"total", m.total().degrees()}, {"valid", v.valid}, {"graded", graded}};
    if (v.first_invalid) r.json["first_invalid"] = *v.first_invalid;
}

// Commands.

Report cmd_split(const Options& o, bool factors) {
    tw::Field f = field_of(o);
    tw::TransitionBundle t = io::transition_from(load(o), f);
    tw::BirkhoffSplit s = tw::birkhoff_split(t);
    Report r;
    r.text = "degrees: " + int_list(s.degrees) + "\n";
    r.json = {{"degrees", s.degrees}};
    if (factors) {
        r.text += "A: " + matrix_text(s.A) + "\nB: " + matrix_text(s.B) + "\n";
        r.json["A"] = io::to_json(s.A, f);
        r.json["B"] = io::to_json(s.B, f);
    }
    return r;
}

Report cmd_check_mts(const Options& o) {
    tw::MixedTwistorStructure m = io::mts_from(load(o), field_of(o));
    Report r;
    describe_mts(m, r);
    return r;
}

Report cmd_rees(const Options& o, const std::string& mts_out) {
    tw::Field f = field_of(o);
    tw::FilteredSpace v = io::filtered_space_from(load(o), f);
    tw::validate(v);
    tw::ReesOutput ro = tw::rees_filtered(v);
    tw::EquivalenceReport eq = tw::equivalence_check(v);
    Report r;
    r.text = "split type: " + ro.split_type.to_string() + "\n";
    r.text += std::string("mhs: ") + (eq.mhs ? "yes" : "no") + "\n";
    r.text += std::string("mts: ") + (eq.mts ? "yes" : "no") + "\n";
    Json hodge = Json::array();
    r.text += "hodge numbers:\n";
    for (const auto& [k, n] : tw::hodge_numbers(v)) {
        auto [w, p, q] = k;
        r.text += "  w=" + std::to_string(w) + " p=" + std::to_string(p) + " q=" + std::to_string(q) + ": " +
                  std::to_string(n) + "\n";
        hodge.push_back({{"w", w}, {"p", p}, {"q", q}, {"dim", n}});
    }
    tw::MixedTwistorStructure m = tw::rees_mts(v);
    Report inner;
    describe_mts(m, inner);
    r.text += inner.text;
    r.json = {{"split_type", ro.split_type.degrees()}, {"mhs", eq.mhs}, {"mts", eq.mts}, {"hodge", hodge},
              {"report", inner.json}};
    if (!mts_out.empty()) {
        std::ofstream out(mts_out);
        if (!out) throw tw::Error("cannot write " + mts_out);
        out << io::document(m, f).dump(2) << "\n";
    }
    return r;
}

struct MorphismInput {
    tw::BundleMap f;
    bool filtered = false;
    tw::MtsMorphism phi;
};

MorphismInput load_morphism(const Options& o, const std::string& source, const std::string& target) {
    tw::Field fld = field_of(o);
    MorphismInput in{io::map_from(load(o), fld), false, {}};
    if (source.empty() != target.empty()) throw tw::Error("--source and --target go together");
    if (!source.empty()) {
        tw::MixedTwistorStructure s = io::mts_from(io::read_document_file(source), fld);
        tw::MixedTwistorStructure t = io::mts_from(io::read_document_file(target), fld);
        if (s.total() != in.f.source() || t.total() != in.f.target())
            throw tw::Error("map does not match the source and target structures");
        in.filtered = true;
        in.phi = {s, t, in.f};
        tw::check_filtered(in.phi);
    }
    return in;
}

Report cmd_kernel(const Options& o, const std::string& source, const std::string& target) {
    MorphismInput in = load_morphism(o, source, target);
    Report r;
    if (in.filtered) {
        tw::MixedTwistorStructure k = tw::mts_kernel(in.phi);
        describe_mts(k, r);
        r.text = "kernel: " + k.total().to_string() + "\n" + r.text;
        r.json["mts"] = io::to_json(k, field_of(o));
        return r;
    }
    tw::SubBundle k = tw::kernel(in.f);
    r.text = "kernel: " + k.bundle.to_string() + "\n";
    r.json = {{"kernel", k.bundle.degrees()}, {"incl", io::to_json(k.incl, field_of(o))}};
    return r;
}

Report cmd_cokernel(const Options& o, const std::string& source, const std::string& target) {
    MorphismInput in = load_morphism(o, source, target);
    Report r;
    if (in.filtered) {
        tw::MixedTwistorStructure c = tw::mts_cokernel(in.phi);
        describe_mts(c, r);
        r.text = "cokernel: " + c.total().to_string() + "\n" + r.text;
        r.json["mts"] = io::to_json(c, field_of(o));
        return r;
    }
    tw::CokernelReport c = tw::cokernel(in.f);
    r.text = "free: " + c.free_part.to_string() + "\ntorsion: " + forms_text(c.torsion_divisors) +
             "\ntorsion length: " + std::to_string(c.torsion_length()) + "\n";
    Json tors = Json::array();
    for (const auto& t : c.torsion_divisors) tors.push_back(io::to_json(t, field_of(o)));
    r.json = {{"free", c.free_part.degrees()},
              {"torsion", tors},
              {"torsion_length", c.torsion_length()},
              {"projection", io::to_json(c.projection, field_of(o))}};
    return r;
}

tw::SplitBundle bundle_arg(const std::string& s) {
    if (s.size() > 5 && s.substr(s.size() - 5) == ".json") return io::bundle_from(io::read_document_file(s));
    return tw::SplitBundle(parse_degrees(s));
}

Report cmd_ext(const std::vector<std::string>& args) {
    if (args.size() != 2) throw tw::Error("ext takes two bundles");
    tw::SplitBundle e = bundle_arg(args[0]), f = bundle_arg(args[1]);
    std::size_t n = tw::ext1_dim(e, f);
    return {"ext1: " + std::to_string(n) + "\n", {{"ext1", n}}};
}

Report cmd_moduli_dim(const Options& o, const std::string& vector, int lo) {
    tw::WeightVector b;
    if (!vector.empty()) {
        b.lo = lo;
        for (int x : parse_degrees(vector)) b.b.push_back(x);
    } else {
        b = io::weight_vector_from(load(o));
    }
    tw::validate(b);
    long framed = tw::framed_dim(b), stack = tw::stack_dim(b);
    tw::CrosscheckReport c = tw::formula_crosscheck(b);
    if (!c.agree)
        throw tw::TheoremViolation("closed formula " + std::to_string(c.closed_form) + " differs from stack " +
                                   std::to_string(c.stack));
    return {"framed: " + std::to_string(framed) + ", stack: " + std::to_string(stack) + "\n",
            {{"framed", framed}, {"stack", stack}, {"pairwise_ext", tw::pairwise_ext_dim(b)}, {"closed_form", c.closed_form}}};
}

std::string sheaf_text(const tw::SheafReport& s) {
    std::string out = s.free.to_string();
    if (!s.torsion.empty()) out += " torsion " + forms_text(s.torsion);
    return out;
}

Report cmd_ss(const Options& o, int max_page) {
    tw::Field f = field_of(o);
    tw::FilteredComplex c = io::complex_from(load(o), f);
    int bound = tw::stable_page(c);
    std::vector<tw::SpectralPage> pages = tw::spectral_sequence(c, max_page > 0 ? max_page : std::max(bound, 2));
    // E_k = E_infinity once every later differential vanishes.
    std::size_t shown = pages.size();
    if (max_page <= 0)
        while (shown > 1 && pages[shown - 2].all_zero()) --shown;
    Report r;
    r.json = {{"pages", Json::array()}};
    for (std::size_t k = 0; k < shown; ++k) {
        const tw::SpectralPage& page = pages[k];
        r.text += "E" + std::to_string(page.r) + ":\n";
        Json entries = Json::array();
        for (const auto& [pq, s] : page.entries) {
            if (s.free.rank() == 0 && s.torsion.empty()) continue;
            r.text += "  p=" + std::to_string(pq.first) + " q=" + std::to_string(pq.second) + ": " + sheaf_text(s) + "\n";
            entries.push_back({{"p", pq.first}, {"q", pq.second}, {"free", s.free.degrees()},
                               {"torsion_length", s.torsion_length()}});
        }
        r.text += "  d" + std::to_string(page.r) + (page.all_zero() ? " zero" : " nonzero") + "\n";
        r.json["pages"].push_back({{"r", page.r}, {"entries", entries}, {"d_zero", page.all_zero()}});
    }
    if (max_page <= 0) {
        r.text += "degenerates at E" + std::to_string(pages[shown - 1].r) + "\n";
        r.json["degenerates_at"] = pages[shown - 1].r;
    }
    tw::MtcReport mtc = tw::validate_mtc(c);
    r.json["mtc"] = mtc.valid;
    if (!mtc.valid) {
        r.text += "not a mixed twistor complex\n";
        for (const auto& ch : mtc.checks)
            if (!ch.pure)
                r.text += "  H^" + std::to_string(ch.i) + "(Gr_" + std::to_string(ch.n) + "): " + sheaf_text(ch.gr) +
                          " not pure of weight " + std::to_string(ch.n + ch.i) + "\n";
        return r;
    }
    tw::DegenerationReport d = tw::degeneration_check(c);
    r.text += std::string("mixed twistor complex, d2 ") + (d.d2_zero ? "zero" : "nonzero") + "\n";
    r.json["d2_zero"] = d.d2_zero;
    r.json["cohomology"] = Json::object();
    for (const auto& [i, m] : d.cohomology) {
        Report h;
        describe_mts(m, h, "  ");
        r.text += "H^" + std::to_string(i) + ": " + m.total().to_string() + "\n" + h.text;
        r.json["cohomology"][std::to_string(i)] = h.json;
    }
    return r;
}

Report cmd_patch(const Options& o) {
    tw::Field f = field_of(o);
    io::PatchInput p = io::patch_from(load(o), f);
    tw::PatchResult res = p.chain ? tw::patch_chain(p.M, p.P, p.Q, p.R, p.N, p.u, p.a, p.b, p.v)
                                  : tw::patch(p.M, p.P, p.N, p.u, p.v);
    Report r;
    r.json = {{"pieces", Json::array()}};
    for (const auto& [ni, e] : res.pieces) {
        r.text += "Gr_" + std::to_string(ni.first) + " H^" + std::to_string(ni.second) + ": " + e.to_string() + "\n";
        r.json["pieces"].push_back({{"n", ni.first}, {"i", ni.second}, {"degrees", e.degrees()}});
    }
    if (res.pieces.empty()) r.text = "zero\n";
    return r;
}

Report cmd_quat(const Options& o, std::size_t standard) {
    if (o.field != "gaussian") throw tw::Error("quat requires --field gaussian");
    tw::RealStructure rs = standard > 0 ? tw::standard_quaternionic(standard)
                                        : io::real_structure_from(load(o), tw::Field::gaussian);
    if (standard > 0) g_input = io::document(rs);
    tw::QuaternionicSpace q = tw::quaternionic_from_weight1(rs, tw::Field::gaussian);
    std::string defect = tw::quaternion_defect(q);
    if (!defect.empty()) throw tw::TheoremViolation("quaternion relations fail: " + defect);
    Report r;
    r.text = "dim: " + std::to_string(q.dim) + "\nI: " + matrix_text(q.I) + "\nJ: " + matrix_text(q.J) +
             "\nK: " + matrix_text(q.K) + "\nrelations: I^2 = J^2 = K^2 = -1, IJ = K\n";
    r.json = {{"dim", q.dim},
              {"I", io::to_json(q.I, tw::Field::rational)},
              {"J", io::to_json(q.J, tw::Field::rational)},
              {"K", io::to_json(q.K, tw::Field::rational)},
              {"relations", true}};
    return r;
}

Report cmd_suite(const Options& o, std::vector<std::string> names, std::size_t cases, bool& failed) {
    if (names.empty()) names = tw::suite_names();
    Report r;
    r.json = Json::array();
    failed = false;
    for (const auto& name : names) {
        std::size_t n = cases > 0 ? cases : tw::default_cases(name);
        tw::SuiteOutcome out = tw::run_suite(name, n, o.seed, o.jobs);
        r.text += name + ": " + std::to_string(out.cases) + " cases, " + std::to_string(out.failures.size()) +
                  " failures\n";
        Json fails = Json::array();
        for (const auto& [k, msg] : out.failures) {
            r.text += "  case " + std::to_string(k) + ": " + msg + "\n";
            fails.push_back({{"case", k}, {"message", msg}});
        }
        r.json.push_back({{"suite", name}, {"cases", out.cases}, {"failures", fails}});
        failed = failed || !out.passed();
    }
    return r;
}

Report cmd_random_mtc(const Options& o, const tw::RandomMtcShape& shape) {
    tw::Rng rng(o.seed);
    Json doc = io::document(tw::random_mtc(rng, shape), tw::Field::rational);
    return {doc.dump(2) + "\n", doc};
}

void emit(const Options& o, const Report& r, bool document_only = false) {
    std::string body = (o.format == "json" && !document_only) ? r.json.dump(2) + "\n" : r.text;
    if (o.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw tw::Error("cannot write " + o.output);
    out << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with mixed twistor structures on the projective line"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input) sub->add_option("input,--input", o.input, "Input document");
        sub->add_option("--output", o.output, "Write the report here instead of stdout");
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--field", o.field, "Scalar field")->check(CLI::IsMember({"rational", "gaussian"}));
    };

    bool factors = false;
    auto* split = app.add_subcommand("split", "Splitting type of a transition bundle");
    common(split);
    split->add_flag("--factors", factors, "Also print the factors A and B");

    auto* check_mts = app.add_subcommand("check-mts", "Validate a mixed twistor structure");
    common(check_mts);

    std::string mts_out;
    auto* rees = app.add_subcommand("rees", "Rees bundle of a tri-filtered space");
    common(rees);
    rees->add_option("--mts", mts_out, "Write the resulting MTS document here");

    std::string source, target;
    auto* kernel = app.add_subcommand("kernel", "Kernel of a bundle map or MTS morphism");
    common(kernel);
    kernel->add_option("--source", source, "Source MTS document");
    kernel->add_option("--target", target, "Target MTS document");
    auto* cokernel = app.add_subcommand("cokernel", "Cokernel of a bundle map or MTS morphism");
    common(cokernel);
    cokernel->add_option("--source", source, "Source MTS document");
    cokernel->add_option("--target", target, "Target MTS document");

    std::vector<std::string> ext_args;
    auto* ext = app.add_subcommand("ext", "dim Ext^1(E, F) for degree lists or bundle documents");
    common(ext, false);
    ext->add_option("bundles", ext_args, "E and F")->expected(2);

    std::string vec;
    int lo = 0;
    auto* moduli = app.add_subcommand("moduli-dim", "Framed and stack dimensions for a weight vector");
    common(moduli, false);
    moduli->add_option("b", vec, "Comma-separated multiplicities");
    moduli->add_option("--input", o.input, "Weight-vector document");
    moduli->add_option("--lo", lo, "Weight of the first entry");

    int max_page = 0;
    auto* ss = app.add_subcommand("ss", "Weight spectral sequence of a filtered complex");
    common(ss);
    ss->add_option("--pages", max_page, "Number of pages (default: up to the stable page)");

    auto* patch = app.add_subcommand("patch", "Glue chart complexes");
    common(patch);

    std::size_t standard = 0;
    auto* quat = app.add_subcommand("quat", "Quaternionic space of a weight-1 antipodal structure");
    common(quat);
    quat->add_option("--standard", standard, "Use the standard structure on this many copies of O(1)^2");

    std::vector<std::string> suites;
    std::size_t cases = 0;
    auto* suite = app.add_subcommand("suite", "Randomized property suites");
    common(suite, false);
    suite->add_option("names", suites, "Suites to run (default: all)");
    suite->add_option("--cases", cases, "Cases per randomized suite");
    suite->add_option("--seed", o.seed, "Base seed");
    suite->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    tw::RandomMtcShape shape;
    auto* random_mtc = app.add_subcommand("random-mtc", "Generate a mixed twistor complex document");
    random_mtc->add_option("--output", o.output, "Write the document here instead of stdout");
    random_mtc->add_option("--seed", o.seed, "Seed");
    random_mtc->add_option("--max-length", shape.max_length, "Maximal number of objects");
    random_mtc->add_option("--max-rank", shape.max_rank, "Maximal rank of an object");
    random_mtc->add_option("--max-weight", shape.max_weight, "Maximal weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*split) emit(o, cmd_split(o, factors));
        if (*check_mts) emit(o, cmd_check_mts(o));
        if (*rees) emit(o, cmd_rees(o, mts_out));
        if (*kernel) emit(o, cmd_kernel(o, source, target));
        if (*cokernel) emit(o, cmd_cokernel(o, source, target));
        if (*ext) emit(o, cmd_ext(ext_args));
        if (*moduli) emit(o, cmd_moduli_dim(o, vec, lo));
        if (*ss) emit(o, cmd_ss(o, max_page));
        if (*patch) emit(o, cmd_patch(o));
        if (*quat) emit(o, cmd_quat(o, standard));
        if (*random_mtc) emit(o, cmd_random_mtc(o, shape), true);
        if (*suite) {
            bool failed = false;
            emit(o, cmd_suite(o, suites, cases, failed));
            if (failed) {
                std::cerr << "theorem violation: property suite failures\n";
                return 3;
            }
        }
    } catch (const tw::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        if (!g_input.is_null()) std::cerr << "input:\n" << g_input.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
