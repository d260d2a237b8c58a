#ifndef HYMIN_JSON_RECORDS_HPP
#define HYMIN_JSON_RECORDS_HPP

#include <string>

#include "forms.hpp"
#include "global.hpp"

namespace hymin::records {

// schema identifier embedded in every result document
inline constexpr const char* kSchemaVersion = "hymin-result-v1";

std::string minimize_result_json(const Form& out, const TransformRecord& rec, bool success_known,
                                 bool success);
std::string global_result_json(const Form& out, const global::GlobalRecord& rec);
std::string primes_json(const std::vector<mpz_class>& primes);
std::string invariants_json(const Form& f);
std::string reduce_result_json(const Form& out, const IntMat& t);

// round-trip support: parse a minimize/global result document back into the
// form/matrix/scale pieces and re-render it
struct ParsedRecord {
    Form form;
    IntMat matrix;
    std::map<std::string, long> scale_exps;
    ParsedRecord() : form(2, 0), matrix(0) {}
};
ParsedRecord parse_result_json(const std::string& text);
std::string rerender_result_json(const ParsedRecord& rec);

} // namespace hymin::records

#endif
