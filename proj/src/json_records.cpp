#include "json_records.hpp"

#include <json.hpp>

#include "invariants.hpp"
#include "textio.hpp"

namespace hymin::records {

using nlohmann::json;

namespace {

json matrix_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

IntMat matrix_from_json(const json& rows) {
    std::size_t n = rows.size();
    IntMat m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = mpz_class(rows[i][j].get<std::string>());
    return m;
}

} // namespace

std::string minimize_result_json(const Form& out, const TransformRecord& rec, bool success_known,
                                 bool success) {
    json j;
    j["version"] = kSchemaVersion;
    j["form"] = format_form(out);
    j["matrix"] = matrix_json(rec.matrix);
    j["e"] = rec.scale_exp;
    j["p"] = rec.prime.get_str();
    if (success_known) j["success"] = success;
    return j.dump();
}

std::string global_result_json(const Form& out, const global::GlobalRecord& rec) {
    json j;
    j["version"] = kSchemaVersion;
    j["form"] = format_form(out);
    j["matrix"] = matrix_json(rec.matrix);
    json exps = json::object();
    for (const auto& [p, e] : rec.scale_exps) exps[p.get_str()] = e;
    j["scale_exp"] = exps;
    json touched = json::array();
    for (const auto& p : rec.primes_touched) touched.push_back(p.get_str());
    j["primes_touched"] = touched;
    return j.dump();
}

std::string primes_json(const std::vector<mpz_class>& primes) {
    json j;
    j["version"] = kSchemaVersion;
    json arr = json::array();
    for (const auto& p : primes) arr.push_back(p.get_str());
    j["primes"] = arr;
    return j.dump();
}

std::string invariants_json(const Form& f) {
    json j;
    j["version"] = kSchemaVersion;
    if (f.n_vars() != 3) throw std::invalid_argument("invariants: ternary form required");
    if (f.degree() % 2 == 0) {
        auto [i1, i2] = inv::invariants_even(f);
        j["kind"] = "even";
        j["I1"] = {{"value", i1.value.get_str()}, {"tag", i1.tag}};
        j["I2"] = {{"value", i2.value.get_str()}, {"tag", i2.tag}};
        mpz_class g = gcd(abs(i1.value), abs(i2.value));
        j["gcd"] = g.get_str();
    } else {
        inv::Covariant cov = inv::cubic_covariant(f);
        if (cov.result.is_zero())
            throw std::invalid_argument("invariants: cubic covariant vanishes");
        auto [c4, c6] = inv::ternary_cubic_invariants(cov.result);
        j["kind"] = "odd";
        j["covariant_tag"] = cov.tag;
        j["c4"] = {{"value", c4.value.get_str()}, {"tag", c4.tag}};
        j["c6"] = {{"value", c6.value.get_str()}, {"tag", c6.tag}};
        mpz_class g = gcd(abs(c4.value), abs(c6.value));
        j["gcd"] = g.get_str();
    }
    return j.dump();
}

std::string reduce_result_json(const Form& out, const IntMat& t) {
    json j;
    j["version"] = kSchemaVersion;
    j["form"] = format_form(out);
    j["matrix"] = matrix_json(t);
    return j.dump();
}

ParsedRecord parse_result_json(const std::string& text) {
    json j = json::parse(text);
    ParsedRecord rec;
    rec.form = parse_form(j.at("form").get<std::string>());
    rec.matrix = matrix_from_json(j.at("matrix"));
    if (j.contains("scale_exp") && j["scale_exp"].is_object())
        for (auto& [k, v] : j["scale_exp"].items()) rec.scale_exps[k] = v.get<long>();
    else if (j.contains("e") && j.contains("p"))
        rec.scale_exps[j["p"].get<std::string>()] = j["e"].get<long>();
    return rec;
}

std::string rerender_result_json(const ParsedRecord& rec) {
    json j;
    j["version"] = kSchemaVersion;
    j["form"] = format_form(rec.form);
    j["matrix"] = matrix_json(rec.matrix);
    json exps = json::object();
    for (const auto& [p, e] : rec.scale_exps) exps[p] = e;
    j["scale_exp"] = exps;
    return j.dump();
}

} // namespace hymin::records
