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

#include "twistor/suite/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "twistor/bundles/birkhoff.hpp"
#include "twistor/complexes/complexes.hpp"
#include "twistor/error.hpp"
#include "twistor/moduli/moduli.hpp"
#include "twistor/mts/mts.hpp"
#include "twistor/rees/rees.hpp"

namespace twistor {

namespace {

using Case = std::function<std::string(std::size_t index, Rng& rng)>;

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::string abelian_case(std::size_t, Rng& rng) {
    RandomMtsShape shape{1, 4, 0, 3, 2};
    MixedTwistorStructure a = random_mts(rng, shape);
    MixedTwistorStructure b = random_mts(rng, shape);
    MtsMorphism phi = random_morphism(rng, a, b);
    MtsReport k = validate_mts(mts_kernel(phi));
    if (!k.valid) return "kernel invalid at weight " + std::to_string(*k.first_invalid);
    MtsReport c = validate_mts(mts_cokernel(phi));
    if (!c.valid) return "cokernel invalid at weight " + std::to_string(*c.first_invalid);
    ImageCoimage ic = mts_image_coimage(phi);
    if (!is_isomorphism(ic.comparison)) return "coimage -> image is not an isomorphism";
    return "";
}

std::string rees_case(std::size_t index, Rng& rng) {
    FilteredSpace v = random_filtered_space(rng, 5, index % 2 == 0);
    bool mhs = is_complex_mhs(v);
    bool mts = validate_mts(rees_mts(v)).valid;
    if (mhs != mts) return std::string("mhs ") + (mhs ? "yes" : "no") + " but mts " + (mts ? "yes" : "no");
    return "";
}

LaurentMatrix unimodular(Rng& rng, std::size_t n, bool in_s) {
    LaurentMatrix u = LaurentMatrix::identity(n);
    for (int k = 0; k < 4; ++k) {
        auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (i == j) continue;
        std::vector<Scalar> cs;
        for (int e = 0; e <= 2; ++e) cs.push_back(rng.scalar(2));
        Poly p(cs);
        LaurentMatrix el = LaurentMatrix::identity(n);
        el(i, j) = in_s ? Laurent::from_s(p) : Laurent::from_t(p);
        u = u * el;
    }
    return u;
}

std::string factorization_defect(const LaurentMatrix& t, const BirkhoffSplit& s) {
    std::vector<int> e;
    for (int d : s.degrees) e.push_back(-d);
    if (s.B * monomial_diag(e) * s.A != t) return "B diag A != T";
    if (!in_t_ring(s.A) || !in_t_ring(s.Ainv)) return "A not over K[t]";
    if (!in_s_ring(s.B) || !in_s_ring(s.Binv)) return "B not over K[1/t]";
    LaurentMatrix id = LaurentMatrix::identity(t.rows());
    if (s.A * s.Ainv != id || s.B * s.Binv != id) return "factor not invertible";
    return "";
}

std::string birkhoff_case(std::size_t, Rng& rng) {
    std::vector<int> d(3);
    for (auto& x : d) x = static_cast<int>(rng.uniform(-3, 3));
    LaurentMatrix t = SplitBundle(d).transition();
    t(0, 1) = Laurent::monomial(static_cast<int>(rng.uniform(-3, 3)), rng.scalar(2));
    t(1, 2) = Laurent::monomial(static_cast<int>(rng.uniform(-3, 3)), rng.scalar(2));
    t(0, 2) = Laurent::monomial(static_cast<int>(rng.uniform(-3, 3)), rng.scalar(2));
    BirkhoffSplit s = birkhoff_split(t);
    if (auto m = factorization_defect(t, s); !m.empty()) return m;
    LaurentMatrix t2 = unimodular(rng, 3, true) * t * unimodular(rng, 3, false);
    BirkhoffSplit s2 = birkhoff_split(t2);
    if (auto m = factorization_defect(t2, s2); !m.empty()) return "after chart change: " + m;
    if (s2.degrees != s.degrees) return "splitting type changed under a chart change";
    return "";
}

std::string degen_case(std::size_t, Rng& rng) {
    FilteredComplex c = random_mtc(rng);
    DegenerationReport r = degeneration_check(c);
    for (const auto& [i, m] : r.cohomology) {
        MtsReport v = validate_mts(m);
        if (!v.valid) return "H^" + std::to_string(i) + " invalid at weight " + std::to_string(*v.first_invalid);
    }
    return "";
}

std::string ext_case(std::size_t index, Rng&) {
    int i = static_cast<int>(index / 9) - 4, j = static_cast<int>(index % 9) - 4;
    std::size_t want = static_cast<std::size_t>(std::max(i - j - 1, 0));
    std::size_t got = ext1_dim(SplitBundle::line(i), SplitBundle::line(j));
    std::size_t h1 = cohomology(SplitBundle::line(j - i)).h1;
    if (got != want || h1 != want)
        return "ext1(O(" + std::to_string(i) + "), O(" + std::to_string(j) + ")) = " + std::to_string(got);
    return "";
}

std::vector<WeightVector> moduli_vectors() {
    std::vector<WeightVector> out;
    for (int lo : {-2, 0, 1})
        for (int len = 1; len <= 5; ++len) {
            std::vector<long> b(static_cast<std::size_t>(len), 0);
            for (;;) {
                if (std::any_of(b.begin(), b.end(), [](long x) { return x > 0; })) out.push_back({lo, b});
                std::size_t k = 0;
                while (k < b.size() && b[k] == 3) b[k++] = 0;
                if (k == b.size()) break;
                ++b[k];
            }
        }
    return out;
}

std::string moduli_case(const WeightVector& b) {
    if (framed_dim(b) != pairwise_ext_dim(b)) return "framed_dim differs from the pairwise Ext sum";
    if (!formula_crosscheck(b).agree) return "closed formula disagrees with stack_dim";
    return "";
}

SuiteOutcome run_cases(const std::string& name, std::size_t cases, std::uint64_t seed, unsigned jobs,
                       const Case& body) {
    std::vector<std::string> result(cases);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < cases;) {
            Rng rng(mix(seed ^ mix(k)));
            try {
                result[k] = body(k, rng);
            } catch (const TheoremViolation& e) {
                result[k] = std::string("theorem violation: ") + e.what();
            } catch (const std::exception& e) {
                result[k] = std::string("error: ") + e.what();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    SuiteOutcome out{name, cases, {}};
    for (std::size_t k = 0; k < cases; ++k)
        if (!result[k].empty()) out.failures.emplace_back(k, result[k]);
    return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"abelian", "rees", "birkhoff", "degen", "ext", "moduli"}; }

std::size_t default_cases(const std::string& name) {
    if (name == "abelian") return 100;
    if (name == "rees") return 200;
    if (name == "birkhoff") return 100;
    if (name == "degen") return 50;
    if (name == "ext") return 81;
    if (name == "moduli") return moduli_vectors().size();
    throw Error("unknown suite '" + name + "'");
}

SuiteOutcome run_suite(const std::string& name, std::size_t cases, std::uint64_t seed, unsigned jobs) {
    if (name == "abelian") return run_cases(name, cases, seed, jobs, abelian_case);
    if (name == "rees") return run_cases(name, cases, seed, jobs, rees_case);
    if (name == "birkhoff") return run_cases(name, cases, seed, jobs, birkhoff_case);
    if (name == "degen") return run_cases(name, cases, seed, jobs, degen_case);
    if (name == "ext") return run_cases(name, 81, 0, jobs, ext_case);
    if (name == "moduli") {
        auto vs = moduli_vectors();
        return run_cases(name, vs.size(), 0, jobs, [&](std::size_t k, Rng&) { return moduli_case(vs[k]); });
    }
    throw Error("unknown suite '" + name + "'");
}

}  // namespace twistor
