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

#ifndef TWISTOR_IO_JSON_HPP
#define TWISTOR_IO_JSON_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistor/bundles/birkhoff.hpp"
#include "twistor/complexes/complexes.hpp"
#include "twistor/moduli/moduli.hpp"
#include "twistor/mts/mts.hpp"
#include "twistor/realstruct/realstruct.hpp"
#include "twistor/rees/rees.hpp"

namespace twistor::io {

using Json = nlohmann::json;

/// Malformed document. path() is the offending field, e.g. "$.T.entries[0][1]".
class ParseError : public Error {
   public:
    ParseError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

   private:
    std::string path_;
};

// Values. Readers take the path of j for error messages.

/// "p/q" in rational mode, {"re","im"} in Gaussian mode. Throws Error when a
/// non-real value is written in rational mode.
Json to_json(const Scalar& x, Field field);
/// Accepts strings, integers and {"re","im"}; rejects imaginary parts in rational mode.
Scalar read_scalar(const Json& j, Field field, const std::string& path = "$");

/// null for the Zero form.
Json to_json(const BinaryForm& f, Field field);
BinaryForm read_form(const Json& j, Field field, const std::string& path = "$");

Json to_json(const LaurentMatrix& m, Field field);
LaurentMatrix read_laurent_matrix(const Json& j, Field field, const std::string& path = "$");

/// List of rows.
Json to_json(const ScalarMatrix& m, Field field);
ScalarMatrix read_scalar_matrix(const Json& j, Field field, const std::string& path = "$");
/// List of column vectors of length dim.
Json columns_to_json(const ScalarMatrix& m, Field field);
ScalarMatrix read_columns(const Json& j, std::size_t dim, Field field, const std::string& path = "$");

Json to_json(const SplitBundle& e);
SplitBundle read_bundle(const Json& j, const std::string& path = "$");

Json to_json(const BundleMap& f, Field field);
/// Checks every entry degree against source and target.
BundleMap read_map(const Json& j, Field field, const std::string& path = "$");

Json to_json(const MixedTwistorStructure& m, Field field);
MixedTwistorStructure read_mts(const Json& j, Field field, const std::string& path = "$");

Json to_json(const FilteredSpace& v, Field field);
FilteredSpace read_filtered_space(const Json& j, Field field, const std::string& path = "$");

Json to_json(const FilteredComplex& c, Field field);
FilteredComplex read_complex(const Json& j, Field field, const std::string& path = "$");

Json to_json(const WeightVector& b);
WeightVector read_weight_vector(const Json& j, const std::string& path = "$");

/// The involution is stored under "involution"; the matrix is always Gaussian.
Json to_json(const RealStructure& r);
RealStructure read_real_structure(const Json& j, Field field, const std::string& path = "$");

Json to_json(const ChartComplex& c, Field field);
ChartComplex read_chart_complex(const Json& j, Field field, const std::string& path = "$");

/// M <-u- P -v-> N, or the chain M <-u- P -a-> Q <-b- R -v-> N when Q is present.
struct PatchInput {
    ChartComplex M, P, N;
    ChartMap u, v;
    bool chain = false;
    ChartComplex Q, R;
    ChartMap a, b;
};
Json to_json(const PatchInput& p, Field field);
PatchInput read_patch(const Json& j, Field field, const std::string& path = "$");

// Documents: the payload fields plus "kind" and "version": 1.

inline constexpr int document_version = 1;

Json make_document(const std::string& kind, Json payload);
/// Parses text; throws ParseError on invalid JSON, a missing kind, or a bad version.
Json parse_document(const std::string& text);
Json read_document_file(const std::string& file);
std::string document_kind(const Json& doc);
/// Throws Error("expected a <kind> document, got <other>").
void expect_kind(const Json& doc, const std::string& kind);

Json document(const TransitionBundle& t, Field field);
Json document(const SplitBundle& e);
Json document(const BundleMap& f, Field field);
Json document(const MixedTwistorStructure& m, Field field);
Json document(const FilteredSpace& v, Field field);
Json document(const FilteredComplex& c, Field field);
Json document(const WeightVector& b);
Json document(const RealStructure& r);
Json document(const PatchInput& p, Field field);

TransitionBundle transition_from(const Json& doc, Field field);
SplitBundle bundle_from(const Json& doc);
BundleMap map_from(const Json& doc, Field field);
MixedTwistorStructure mts_from(const Json& doc, Field field);
FilteredSpace filtered_space_from(const Json& doc, Field field);
FilteredComplex complex_from(const Json& doc, Field field);
WeightVector weight_vector_from(const Json& doc);
RealStructure real_structure_from(const Json& doc, Field field);
PatchInput patch_from(const Json& doc, Field field);

}  // namespace twistor::io

#endif
