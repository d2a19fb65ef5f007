#include "json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homds::io {

namespace {

std::uint64_t element(const PrimeField& f, const json& x) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected an integer field element");
    if (x.is_number_unsigned()) {
        const auto v = x.get<std::uint64_t>();
        if (v >= f.modulus()) throw std::invalid_argument("field element " + std::to_string(v) + " is not reduced");
        return v;
    }
    return f.reduce_signed(x.get<std::int64_t>());
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

json code_or_throw(const json& j) {
    if (!j.contains("code")) throw std::invalid_argument("evidence has no 'code' field");
    return j.at("code");
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("'" + path.string() + "': " + e.what());
    }
}

json to_json(IndexSet s) {
    json out = json::array();
    for (int e : s.elements()) out.push_back(e + 1);
    return out;
}

IndexSet index_set_from_json(const json& j, int n, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array of indices");
    IndexSet s;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + ": indices must be integers");
        const int e = x.get<int>();
        if (e < 1 || e > n) throw std::invalid_argument(std::string(what) + ": index " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
        if (s.contains(e - 1)) throw std::invalid_argument(std::string(what) + ": repeated index " + std::to_string(e));
        s.insert(e - 1);
    }
    return s;
}

std::vector<IndexSet> sets_from_json(const json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("'sets' must be an array");
    std::vector<IndexSet> out;
    for (const auto& s : j) out.push_back(index_set_from_json(s, n, "sets"));
    return out;
}

json to_json(const SetFamily& f) {
    json out{{"n", f.n}, {"k", f.k}, {"sets", json::array()}};
    for (auto s : f.sets) out["sets"].push_back(to_json(s));
    if (f.has_deltas()) out["deltas"] = f.deltas;
    return out;
}

SetFamily family_from_json(const json& j) {
    SetFamily f;
    f.n = int_field(j, "n");
    f.k = int_field(j, "k");
    if (f.n < 1 || f.n > IndexSet::kCapacity) throw std::invalid_argument("n must lie in [1, 64]");
    if (!j.contains("sets")) throw std::invalid_argument("missing field 'sets'");
    f.sets = sets_from_json(j.at("sets"), f.n);
    if (j.contains("deltas")) f.deltas = j.at("deltas").get<std::vector<int>>();
    f.validate();
    return f;
}

json to_json(const ZeroPattern& p) {
    json out{{"n", p.n}, {"k", p.k}, {"sets", json::array()}};
    for (auto s : p.rows) out["sets"].push_back(to_json(s));
    return out;
}

ZeroPattern pattern_from_json(const json& j) {
    ZeroPattern p;
    p.n = int_field(j, "n");
    p.k = int_field(j, "k");
    if (p.n < 1 || p.n > IndexSet::kCapacity) throw std::invalid_argument("n must lie in [1, 64]");
    if (!j.contains("sets")) throw std::invalid_argument("missing field 'sets'");
    p.rows = sets_from_json(j.at("sets"), p.n);
    p.validate();
    return p;
}

json to_json(const IndexPartition& p) {
    json out = json::array();
    for (auto b : p.blocks) out.push_back(to_json(b));
    return out;
}

json to_json(const MatrixFp& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
    return out;
}

MatrixFp matrix_from_json(const PrimeField& f, const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix must have " + std::to_string(rows) + " rows");
    MatrixFp m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, element(f, j[r][c]));
    }
    return m;
}

json vector_json(std::span<const std::uint64_t> v) { return json(std::vector<std::uint64_t>(v.begin(), v.end())); }

Vector vector_from_json(const PrimeField& f, const json& j, std::size_t len) {
    if (!j.is_array() || j.size() != len) throw std::invalid_argument("vector must have " + std::to_string(len) + " entries");
    Vector v;
    for (const auto& x : j) v.push_back(element(f, x));
    return v;
}

json to_json(const LinearCode& c) {
    json out{{"p", c.field().modulus()}, {"k", c.k()}, {"n", c.n()}, {"generator", to_json(c.generator)}};
    if (c.rs_points) out["rs_points"] = *c.rs_points;
    return out;
}

LinearCode code_from_json(const json& j) {
    if (!j.contains("p") || !j.at("p").is_number_unsigned()) throw std::invalid_argument("missing field 'p'");
    const PrimeField f(j.at("p").get<std::uint64_t>());
    const int k = int_field(j, "k");
    const int n = int_field(j, "n");
    if (k < 1 || n < k || n > IndexSet::kCapacity) throw std::invalid_argument("need 1 <= k <= n <= 64");
    LinearCode c{MatrixFp(f, 0, 0), std::nullopt};
    if (j.contains("rs_points")) {
        const Vector pts = vector_from_json(f, j.at("rs_points"), static_cast<std::size_t>(n));
        c = vandermonde(f, pts, k);
        if (j.contains("generator") &&
            matrix_from_json(f, j.at("generator"), static_cast<std::size_t>(k), static_cast<std::size_t>(n)) != c.generator)
            throw std::invalid_argument("generator does not match rs_points");
    } else {
        if (!j.contains("generator")) throw std::invalid_argument("need 'generator' or 'rs_points'");
        c.generator = matrix_from_json(f, j.at("generator"), static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    }
    c.validate();
    return c;
}

LinearCode read_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return code_from_json(json::parse(text));
    std::istringstream is(text);
    LinearCode c{read_matrix_text(is), std::nullopt};
    c.validate();
    return c;
}

json mds_violation_json(const LinearCode& code, IndexSet columns) {
    const MatrixFp sub = code.generator.select_columns(columns.elements());
    const MatrixFp ker = kernel_matrix(sub);
    Vector u(static_cast<std::size_t>(code.n()), 0);
    if (ker.rows() > 0) {
        std::size_t at = 0;
        for (int j : columns.elements()) u[static_cast<std::size_t>(j)] = ker(0, at++);
    }
    return json{{"type", "mds-violation"}, {"code", to_json(code)}, {"columns", to_json(columns)}, {"u", u}};
}

json intersection_witness_json(const LinearCode& code, const IntersectionWitness& w) {
    json u = json::array();
    for (const auto& x : w.u) u.push_back(x);
    return json{{"type", "intersection"}, {"code", to_json(code)}, {"family", to_json(w.family)}, {"z", w.z}, {"u", u}};
}

json ld_mds_witness_json(const LinearCode& code, const LdMdsWitness& w) {
    json u = json::array();
    for (const auto& x : w.u) u.push_back(x);
    return json{{"type", "ld-mds"}, {"code", to_json(code)}, {"level", w.level}, {"u", u}, {"syndrome", w.syndrome}};
}

json gzp_certificate_json(const LinearCode& code, const GzpCertificate& c) {
    return json{{"type", "gzp-certificate"}, {"code", to_json(code)}, {"pattern", to_json(c.pattern)}, {"m", to_json(c.m)}};
}

json dual_certificate_json(const SetFamily& family, const DualLpCertificate& c) {
    json weights = json::array();
    for (const auto& [members, mu] : c.weights) weights.push_back(json{{"members", to_json(members)}, {"weight", to_string(mu)}});
    return json{{"type", "lp-dual"}, {"family", to_json(family)}, {"weights", weights}, {"objective", to_string(c.objective)}};
}

Verdict verify_evidence(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) throw std::invalid_argument("evidence needs a string 'type' field");
    Verdict v;
    v.type = j.at("type").get<std::string>();

    if (v.type == "lp-dual") {
        const SetFamily family = family_from_json(j.at("family"));
        DualLpCertificate cert;
        const int ell = static_cast<int>(family.size());
        for (const auto& w : j.at("weights"))
            cert.weights.emplace_back(index_set_from_json(w.at("members"), ell, "members"), Rational(w.at("weight").get<std::string>()));
        for (auto& [members, mu] : cert.weights) mu.canonicalize();
        cert.objective = Rational(j.at("objective").get<std::string>());
        cert.objective.canonicalize();
        v.valid = verify_dual_certificate(family, cert);
        if (!v.valid) v.reason = "weights do not cover every member or the objective does not match";
        return v;
    }

    const LinearCode code = code_from_json(code_or_throw(j));
    const PrimeField& f = code.field();
    const auto n = static_cast<std::size_t>(code.n());

    if (v.type == "mds-violation") {
        const IndexSet cols = index_set_from_json(j.at("columns"), code.n(), "columns");
        const Vector u = vector_from_json(f, j.at("u"), n);
        bool support_ok = true, nonzero = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (u[a] != 0 && !cols.contains(static_cast<int>(a))) support_ok = false;
            nonzero = nonzero || u[a] != 0;
        }
        const bool in_kernel = code.generator.apply(u) == Vector(static_cast<std::size_t>(code.k()), 0);
        v.valid = cols.size() <= code.k() && support_ok && nonzero && in_kernel;
        if (!v.valid) v.reason = "u is not a nonzero kernel vector supported on at most k columns";
    } else if (v.type == "intersection") {
        IntersectionWitness w;
        w.family = family_from_json(j.at("family"));
        w.z = vector_from_json(f, j.at("z"), static_cast<std::size_t>(code.k()));
        for (const auto& x : j.at("u")) w.u.push_back(vector_from_json(f, x, n));
        v.valid = verify_intersection_witness(code.generator, w);
        if (!v.valid) v.reason = "z is not a common nonzero point of the column spans, or the family is not null-intersecting";
    } else if (v.type == "ld-mds") {
        LdMdsWitness w;
        w.level = j.at("level").get<int>();
        for (const auto& x : j.at("u")) w.u.push_back(vector_from_json(f, x, n));
        w.syndrome = vector_from_json(f, j.at("syndrome"), n - static_cast<std::size_t>(code.k()));
        v.valid = verify_ld_mds_witness(code, w);
        if (!v.valid) v.reason = "vectors are not distinct, disagree on the syndrome, or exceed the weight bound";
    } else if (v.type == "gzp-certificate") {
        GzpCertificate c{pattern_from_json(j.at("pattern")), MatrixFp(f, 0, 0)};
        const auto k = static_cast<std::size_t>(code.k());
        c.m = matrix_from_json(f, j.at("m"), k, k);
        v.valid = verify_gzp_certificate(code, c);
        if (!v.valid) v.reason = "M is singular or M G is nonzero on the pattern";
    } else {
        throw std::invalid_argument("unknown evidence type '" + v.type + "'");
    }
    return v;
}

}  // namespace homds::io
