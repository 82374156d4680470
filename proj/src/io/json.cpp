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

#include "twistor/io/json.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace twistor::io {

namespace {

std::string at_key(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at_index(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(at_key(path, key), "missing field");
    return *it;
}

const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    return j;
}

long integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<long>();
}

int small_int(const Json& j, const std::string& path) {
    long v = integer(j, path);
    if (v < -100000 || v > 100000) throw ParseError(path, "integer out of range");
    return static_cast<int>(v);
}

std::size_t count(const Json& j, const std::string& path) {
    long v = integer(j, path);
    if (v < 0 || v > 100000) throw ParseError(path, "expected a nonnegative size");
    return static_cast<std::size_t>(v);
}

int int_key(const std::string& key, const std::string& path) {
    int v = 0;
    auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || end != key.data() + key.size()) throw ParseError(path, "key '" + key + "' is not an integer");
    return v;
}

/// Integer-keyed object, ordered by key.
std::map<int, const Json*> int_keyed(const Json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object keyed by integers");
    std::map<int, const Json*> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[int_key(it.key(), path)] = &it.value();
    return out;
}

mpq_class rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw ParseError(path, "expected an exact rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(path, e.what());
    }
}

std::string kind_name(Chart c) {
    switch (c) {
        case Chart::zero:
            return "zero";
        case Chart::infinity:
            return "infinity";
        case Chart::overlap:
            return "overlap";
    }
    return "zero";
}

Json jumps_to_json(const Jumps& f, Field field) {
    Json out = Json::array();
    for (const auto& [i, s] : f) out.push_back({{"i", i}, {"basis", columns_to_json(s, field)}});
    return out;
}

Jumps read_jumps(const Json& j, std::size_t dim, Field field, const std::string& path) {
    Jumps out;
    array(j, path);
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string p = at_index(path, k);
        int i = small_int(member(j[k], "i", p), at_key(p, "i"));
        out.emplace_back(i, read_columns(member(j[k], "basis", p), dim, field, at_key(p, "basis")));
    }
    return out;
}

Json chart_map_to_json(const ChartMap& m, Field field) {
    Json out = Json::array();
    for (const auto& x : m) out.push_back(to_json(x, field));
    return out;
}

ChartMap read_chart_map(const Json& j, Field field, const std::string& path) {
    array(j, path);
    ChartMap out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_laurent_matrix(j[k], field, at_index(path, k)));
    return out;
}

const Json& payload_field(const Json& doc, const std::string& key) { return member(doc, key, "$"); }

}  // namespace

Json to_json(const Scalar& x, Field field) {
    if (field == Field::rational) {
        if (!x.is_rational()) throw Error("non-real scalar in rational mode");
        return rational_string(x.re());
    }
    return {{"re", rational_string(x.re())}, {"im", rational_string(x.im())}};
}

Scalar read_scalar(const Json& j, Field field, const std::string& path) {
    if (j.is_object()) {
        mpq_class re = rational(member(j, "re", path), at_key(path, "re"));
        mpq_class im = j.contains("im") ? rational(j["im"], at_key(path, "im")) : mpq_class(0);
        if (field == Field::rational && sgn(im) != 0)
            throw ParseError(at_key(path, "im"), "imaginary part in rational mode");
        return Scalar(re, im);
    }
    return Scalar(rational(j, path));
}

Json to_json(const BinaryForm& f, Field field) {
    if (f.is_zero()) return nullptr;
    Json coeffs = Json::array();
    for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(to_json(f.coeff(k), field));
    return {{"deg", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm read_form(const Json& j, Field field, const std::string& path) {
    if (j.is_null()) return BinaryForm();
    int deg = small_int(member(j, "deg", path), at_key(path, "deg"));
    if (deg < 0) throw ParseError(at_key(path, "deg"), "negative degree");
    std::string cp = at_key(path, "coeffs");
    const Json& c = array(member(j, "coeffs", path), cp);
    if (c.size() != static_cast<std::size_t>(deg) + 1)
        throw ParseError(cp, "expected " + std::to_string(deg + 1) + " coefficients");
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) coeffs.push_back(read_scalar(c[k], field, at_index(cp, k)));
    return BinaryForm(deg, std::move(coeffs));
}

Json to_json(const LaurentMatrix& m, Field field) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Json terms = Json::array();
            const Laurent& x = m(i, j);
            if (!x.is_zero())
                for (int e = x.min_exp(); e <= x.max_exp(); ++e)
                    if (!x.coeff(e).is_zero()) terms.push_back({{"exp", e}, {"val", to_json(x.coeff(e), field)}});
            row.push_back(terms);
        }
        entries.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

LaurentMatrix read_laurent_matrix(const Json& j, Field field, const std::string& path) {
    std::size_t rows = count(member(j, "rows", path), at_key(path, "rows"));
    std::size_t cols = count(member(j, "cols", path), at_key(path, "cols"));
    std::string ep = at_key(path, "entries");
    const Json& e = array(member(j, "entries", path), ep);
    if (e.size() != rows) throw ParseError(ep, "expected " + std::to_string(rows) + " rows");
    LaurentMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string rp = at_index(ep, r);
        if (array(e[r], rp).size() != cols) throw ParseError(rp, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            std::string xp = at_index(rp, c);
            const Json& terms = array(e[r][c], xp);
            Laurent x;
            for (std::size_t k = 0; k < terms.size(); ++k) {
                std::string tp = at_index(xp, k);
                int exp = small_int(member(terms[k], "exp", tp), at_key(tp, "exp"));
                x += Laurent::monomial(exp, read_scalar(member(terms[k], "val", tp), field, at_key(tp, "val")));
            }
            out(r, c) = x;
        }
    }
    return out;
}

Json to_json(const ScalarMatrix& m, Field field) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), field));
        out.push_back(row);
    }
    return out;
}

ScalarMatrix read_scalar_matrix(const Json& j, Field field, const std::string& path) {
    array(j, path);
    std::size_t rows = j.size();
    std::size_t cols = rows ? array(j[0], at_index(path, 0)).size() : 0;
    ScalarMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string rp = at_index(path, r);
        if (array(j[r], rp).size() != cols) throw ParseError(rp, "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = read_scalar(j[r][c], field, at_index(rp, c));
    }
    return out;
}

Json columns_to_json(const ScalarMatrix& m, Field field) { return to_json(m.transpose(), field); }

ScalarMatrix read_columns(const Json& j, std::size_t dim, Field field, const std::string& path) {
    array(j, path);
    ScalarMatrix out(dim, j.size());
    for (std::size_t c = 0; c < j.size(); ++c) {
        std::string vp = at_index(path, c);
        if (array(j[c], vp).size() != dim) throw ParseError(vp, "expected a vector of length " + std::to_string(dim));
        for (std::size_t r = 0; r < dim; ++r) out(r, c) = read_scalar(j[c][r], field, at_index(vp, r));
    }
    return out;
}

Json to_json(const SplitBundle& e) { return {{"degrees", e.degrees()}}; }

SplitBundle read_bundle(const Json& j, const std::string& path) {
    std::string dp = at_key(path, "degrees");
    const Json& d = array(member(j, "degrees", path), dp);
    std::vector<int> degrees;
    for (std::size_t k = 0; k < d.size(); ++k) degrees.push_back(small_int(d[k], at_index(dp, k)));
    return SplitBundle(std::move(degrees));
}

Json to_json(const BundleMap& f, Field field) {
    Json m = Json::array();
    for (std::size_t i = 0; i < f.target().rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.source().rank(); ++j) row.push_back(to_json(f(i, j), field));
        m.push_back(row);
    }
    return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrix", m}};
}

BundleMap read_map(const Json& j, Field field, const std::string& path) {
    SplitBundle source = read_bundle(member(j, "source", path), at_key(path, "source"));
    SplitBundle target = read_bundle(member(j, "target", path), at_key(path, "target"));
    std::string mp = at_key(path, "matrix");
    const Json& m = array(member(j, "matrix", path), mp);
    if (m.size() != target.rank()) throw ParseError(mp, "expected " + std::to_string(target.rank()) + " rows");
    BundleMap::FormMatrix forms(target.rank(), source.rank());
    for (std::size_t r = 0; r < target.rank(); ++r) {
        std::string rp = at_index(mp, r);
        if (array(m[r], rp).size() != source.rank())
            throw ParseError(rp, "expected " + std::to_string(source.rank()) + " entries");
        for (std::size_t c = 0; c < source.rank(); ++c) {
            std::string xp = at_index(rp, c);
            BinaryForm f = read_form(m[r][c], field, xp);
            if (!f.is_zero() && f.degree() != target[r] - source[c])
                throw ParseError(xp, "form of degree " + std::to_string(f.degree()) + " where degree " +
                                         std::to_string(target[r] - source[c]) + " is required");
            forms(r, c) = f;
        }
    }
    return BundleMap(source, target, forms);
}

Json to_json(const MixedTwistorStructure& m, Field field) {
    Json weights = Json::array();
    for (const auto& s : m.steps())
        weights.push_back({{"i", s.index}, {"bundle", to_json(s.bundle)}, {"incl", to_json(s.incl, field)}});
    return {{"total", to_json(m.total())}, {"weights", weights}};
}

MixedTwistorStructure read_mts(const Json& j, Field field, const std::string& path) {
    SplitBundle total = read_bundle(member(j, "total", path), at_key(path, "total"));
    std::string wp = at_key(path, "weights");
    const Json& w = array(member(j, "weights", path), wp);
    std::vector<WeightStep> steps;
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::string sp = at_index(wp, k);
        int i = small_int(member(w[k], "i", sp), at_key(sp, "i"));
        SplitBundle b = read_bundle(member(w[k], "bundle", sp), at_key(sp, "bundle"));
        BundleMap incl = read_map(member(w[k], "incl", sp), field, at_key(sp, "incl"));
        if (incl.source() != b || incl.target() != total)
            throw ParseError(at_key(sp, "incl"), "inclusion must map the step bundle to the total bundle");
        steps.push_back({i, b, incl});
    }
    try {
        return MixedTwistorStructure(total, std::move(steps));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(wp, e.what());
    }
}

Json to_json(const FilteredSpace& v, Field field) {
    return {{"dim", v.dim},
            {"W", jumps_to_json(v.W, field)},
            {"F", jumps_to_json(v.F, field)},
            {"Fprime", jumps_to_json(v.Fprime, field)}};
}

FilteredSpace read_filtered_space(const Json& j, Field field, const std::string& path) {
    FilteredSpace v;
    v.dim = count(member(j, "dim", path), at_key(path, "dim"));
    v.W = read_jumps(member(j, "W", path), v.dim, field, at_key(path, "W"));
    v.F = read_jumps(member(j, "F", path), v.dim, field, at_key(path, "F"));
    v.Fprime = read_jumps(member(j, "Fprime", path), v.dim, field, at_key(path, "Fprime"));
    return v;
}

Json to_json(const FilteredComplex& c, Field field) {
    Json objects = Json::object(), diffs = Json::object(), pre = Json::array();
    for (int k = c.lo(); k <= c.hi(); ++k) {
        objects[std::to_string(k)] = to_json(c.object(k));
        if (k < c.hi()) diffs[std::to_string(k)] = to_json(c.differential(k), field);
    }
    for (const auto& lvl : c.preweight()) {
        Json sub = Json::object();
        for (std::size_t j = 0; j < lvl.incl.size(); ++j)
            sub[std::to_string(c.lo() + static_cast<int>(j))] = to_json(lvl.incl[j], field);
        pre.push_back({{"n", lvl.n}, {"sub", sub}});
    }
    return {{"lo", c.lo()}, {"objects", objects}, {"differentials", diffs}, {"preweight", pre}};
}

FilteredComplex read_complex(const Json& j, Field field, const std::string& path) {
    std::string op = at_key(path, "objects");
    auto objs = int_keyed(member(j, "objects", path), op);
    if (objs.empty()) throw ParseError(op, "no objects");
    int lo = objs.begin()->first;
    if (j.contains("lo")) lo = small_int(j["lo"], at_key(path, "lo"));
    int hi = objs.rbegin()->first;
    if (lo > objs.begin()->first) throw ParseError(at_key(path, "lo"), "object below lo");
    std::vector<SplitBundle> objects;
    for (int k = lo; k <= hi; ++k) {
        auto it = objs.find(k);
        objects.push_back(it == objs.end() ? SplitBundle() : read_bundle(*it->second, at_key(op, std::to_string(k))));
    }
    std::string dp = at_key(path, "differentials");
    std::vector<BundleMap> d;
    for (int k = lo; k < hi; ++k) d.emplace_back(objects[k - lo], objects[k + 1 - lo]);
    if (j.contains("differentials"))
        for (const auto& [k, x] : int_keyed(j["differentials"], dp)) {
            std::string xp = at_key(dp, std::to_string(k));
            if (k < lo || k >= hi) throw ParseError(xp, "differential out of range");
            BundleMap f = read_map(*x, field, xp);
            if (f.source() != objects[k - lo] || f.target() != objects[k + 1 - lo])
                throw ParseError(xp, "differential does not match the objects");
            d[k - lo] = f;
        }
    std::string pp = at_key(path, "preweight");
    const Json& pw = array(member(j, "preweight", path), pp);
    std::vector<PreweightLevel> levels;
    for (std::size_t m = 0; m < pw.size(); ++m) {
        std::string lp = at_index(pp, m);
        PreweightLevel lvl{small_int(member(pw[m], "n", lp), at_key(lp, "n")), {}};
        for (int k = lo; k <= hi; ++k) lvl.incl.emplace_back(SplitBundle(), objects[k - lo]);
        std::string sp = at_key(lp, "sub");
        for (const auto& [k, x] : int_keyed(member(pw[m], "sub", lp), sp)) {
            std::string xp = at_key(sp, std::to_string(k));
            if (k < lo || k > hi) throw ParseError(xp, "degree out of range");
            BundleMap f = read_map(*x, field, xp);
            if (f.target() != objects[k - lo]) throw ParseError(xp, "inclusion target does not match the object");
            lvl.incl[k - lo] = f;
        }
        levels.push_back(std::move(lvl));
    }
    try {
        return FilteredComplex(lo, std::move(objects), std::move(d), std::move(levels));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(path, e.what());
    }
}

Json to_json(const WeightVector& b) {
    Json m = Json::object();
    for (int n = b.lo; n <= b.hi(); ++n)
        if (b.at(n) != 0) m[std::to_string(n)] = b.at(n);
    return {{"b", m}};
}

WeightVector read_weight_vector(const Json& j, const std::string& path) {
    std::string bp = at_key(path, "b");
    std::map<int, long> m;
    for (const auto& [n, x] : int_keyed(member(j, "b", path), bp)) {
        long v = integer(*x, at_key(bp, std::to_string(n)));
        if (v < 0) throw ParseError(at_key(bp, std::to_string(n)), "negative multiplicity");
        m[n] = v;
    }
    if (m.empty()) throw ParseError(bp, "empty weight vector");
    return WeightVector::from_map(m);
}

Json to_json(const RealStructure& r) {
    return {{"involution", to_string(r.kind)},
            {"bundle", to_json(r.bundle)},
            {"matrix", to_json(r.S, Field::gaussian)}};
}

RealStructure read_real_structure(const Json& j, Field field, const std::string& path) {
    std::string ip = at_key(path, "involution");
    const Json& inv = member(j, "involution", path);
    RealKind kind;
    if (inv == "antipodal")
        kind = RealKind::antipodal;
    else if (inv == "circular")
        kind = RealKind::circular;
    else
        throw ParseError(ip, "expected \"antipodal\" or \"circular\"");
    SplitBundle e = read_bundle(member(j, "bundle", path), at_key(path, "bundle"));
    std::string mp = at_key(path, "matrix");
    ScalarMatrix s = read_scalar_matrix(member(j, "matrix", path), Field::gaussian, mp);
    if (s.rows() != e.rank() || s.cols() != e.rank())
        throw ParseError(mp, "expected a " + std::to_string(e.rank()) + "x" + std::to_string(e.rank()) + " matrix");
    try {
        return make_real_structure(kind, e, s, field);
    } catch (const Error& x) {
        throw ParseError(path, x.what());
    }
}

Json to_json(const ChartComplex& c, Field field) {
    Json d = Json::array();
    for (const auto& m : c.d) d.push_back(to_json(m, field));
    return {{"chart", kind_name(c.chart)}, {"lo", c.lo}, {"levels", c.levels}, {"d", d}};
}

ChartComplex read_chart_complex(const Json& j, Field field, const std::string& path) {
    ChartComplex c;
    std::string cp = at_key(path, "chart");
    const Json& chart = member(j, "chart", path);
    if (chart == "zero")
        c.chart = Chart::zero;
    else if (chart == "infinity")
        c.chart = Chart::infinity;
    else if (chart == "overlap")
        c.chart = Chart::overlap;
    else
        throw ParseError(cp, "expected \"zero\", \"infinity\" or \"overlap\"");
    c.lo = small_int(member(j, "lo", path), at_key(path, "lo"));
    std::string lp = at_key(path, "levels");
    const Json& lv = array(member(j, "levels", path), lp);
    for (std::size_t k = 0; k < lv.size(); ++k) {
        std::string kp = at_index(lp, k);
        std::vector<int> row;
        for (std::size_t b = 0; b < array(lv[k], kp).size(); ++b) row.push_back(small_int(lv[k][b], at_index(kp, b)));
        c.levels.push_back(std::move(row));
    }
    c.d = read_chart_map(member(j, "d", path), field, at_key(path, "d"));
    try {
        check_chart_complex(c);
    } catch (const Error& e) {
        throw ParseError(path, e.what());
    }
    return c;
}

Json to_json(const PatchInput& p, Field field) {
    Json out = {{"M", to_json(p.M, field)},
                {"P", to_json(p.P, field)},
                {"N", to_json(p.N, field)},
                {"u", chart_map_to_json(p.u, field)},
                {"v", chart_map_to_json(p.v, field)}};
    if (p.chain) {
        out["Q"] = to_json(p.Q, field);
        out["R"] = to_json(p.R, field);
        out["a"] = chart_map_to_json(p.a, field);
        out["b"] = chart_map_to_json(p.b, field);
    }
    return out;
}

PatchInput read_patch(const Json& j, Field field, const std::string& path) {
    PatchInput p;
    auto cx = [&](const char* key) { return read_chart_complex(member(j, key, path), field, at_key(path, key)); };
    auto mp = [&](const char* key) { return read_chart_map(member(j, key, path), field, at_key(path, key)); };
    p.M = cx("M");
    p.P = cx("P");
    p.N = cx("N");
    p.u = mp("u");
    p.v = mp("v");
    if (j.contains("Q")) {
        p.chain = true;
        p.Q = cx("Q");
        p.R = cx("R");
        p.a = mp("a");
        p.b = mp("b");
    }
    return p;
}

Json make_document(const std::string& kind, Json payload) {
    Json out = {{"kind", kind}, {"version", document_version}};
    for (auto it = payload.begin(); it != payload.end(); ++it) out[it.key()] = it.value();
    return out;
}

Json parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected an object");
    const Json& kind = member(doc, "kind", "$");
    if (!kind.is_string()) throw ParseError("$.kind", "expected a string");
    if (doc.contains("version") && integer(doc["version"], "$.version") != document_version)
        throw ParseError("$.version", "unsupported version");
    return doc;
}

Json read_document_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string document_kind(const Json& doc) { return member(doc, "kind", "$").get<std::string>(); }

void expect_kind(const Json& doc, const std::string& kind) {
    std::string got = document_kind(doc);
    if (got != kind) throw Error("expected a " + kind + " document, got " + got);
}

Json document(const TransitionBundle& t, Field field) { return make_document("transition", {{"T", to_json(t.T, field)}}); }
Json document(const SplitBundle& e) { return make_document("bundle", to_json(e)); }
Json document(const BundleMap& f, Field field) { return make_document("map", to_json(f, field)); }
Json document(const MixedTwistorStructure& m, Field field) { return make_document("mts", to_json(m, field)); }
Json document(const FilteredSpace& v, Field field) { return make_document("filtered-space", to_json(v, field)); }
Json document(const FilteredComplex& c, Field field) { return make_document("complex", to_json(c, field)); }
Json document(const WeightVector& b) { return make_document("weight-vector", to_json(b)); }
Json document(const RealStructure& r) { return make_document("real-structure", to_json(r)); }
Json document(const PatchInput& p, Field field) { return make_document("patch", to_json(p, field)); }

TransitionBundle transition_from(const Json& doc, Field field) {
    expect_kind(doc, "transition");
    LaurentMatrix t = read_laurent_matrix(payload_field(doc, "T"), field, "$.T");
    if (t.rows() != t.cols()) throw ParseError("$.T", "transition matrix must be square");
    return TransitionBundle{t};
}

SplitBundle bundle_from(const Json& doc) {
    expect_kind(doc, "bundle");
    return read_bundle(doc);
}

BundleMap map_from(const Json& doc, Field field) {
    expect_kind(doc, "map");
    return read_map(doc, field);
}

MixedTwistorStructure mts_from(const Json& doc, Field field) {
    expect_kind(doc, "mts");
    return read_mts(doc, field);
}

FilteredSpace filtered_space_from(const Json& doc, Field field) {
    expect_kind(doc, "filtered-space");
    return read_filtered_space(doc, field);
}

FilteredComplex complex_from(const Json& doc, Field field) {
    expect_kind(doc, "complex");
    return read_complex(doc, field);
}

WeightVector weight_vector_from(const Json& doc) {
    expect_kind(doc, "weight-vector");
    return read_weight_vector(doc);
}

RealStructure real_structure_from(const Json& doc, Field field) {
    expect_kind(doc, "real-structure");
    return read_real_structure(doc, field);
}

PatchInput patch_from(const Json& doc, Field field) {
    expect_kind(doc, "patch");
    return read_patch(doc, field);
}

}  // namespace twistor::io
