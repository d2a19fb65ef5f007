#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "homds/codes.hpp"
#include "homds/intersect.hpp"
#include "homds/witness.hpp"

namespace homds::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);

// Index sets are 1-based on the wire.
json to_json(IndexSet s);
IndexSet index_set_from_json(const json& j, int n, const char* what);
std::vector<IndexSet> sets_from_json(const json& j, int n);

json to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);
json to_json(const ZeroPattern& p);
ZeroPattern pattern_from_json(const json& j);
json to_json(const IndexPartition& p);

json to_json(const MatrixFp& m);
MatrixFp matrix_from_json(const PrimeField& f, const json& j, std::size_t rows, std::size_t cols);
json vector_json(std::span<const std::uint64_t> v);
Vector vector_from_json(const PrimeField& f, const json& j, std::size_t len);

json to_json(const LinearCode& c);
LinearCode code_from_json(const json& j);
// JSON code document, or a generator in the plain matrix text format.
LinearCode read_code(const std::filesystem::path& path);

// Self-contained evidence: every witness carries the code it refers to.
json mds_violation_json(const LinearCode& code, IndexSet columns);
json intersection_witness_json(const LinearCode& code, const IntersectionWitness& w);
json ld_mds_witness_json(const LinearCode& code, const LdMdsWitness& w);
json gzp_certificate_json(const LinearCode& code, const GzpCertificate& c);
json dual_certificate_json(const SetFamily& family, const DualLpCertificate& c);

struct Verdict {
    std::string type;
    bool valid = false;
    std::string reason;
};

// Dispatches on the "type" field.
Verdict verify_evidence(const json& j);

}  // namespace homds::io
