#include "textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hymin {

namespace {

struct RawTerm {
    mpz_class coeff;
    int expo[10] = {0};
    int max_var = -1;
    int total = 0;
};

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error: " + msg);
}

mpz_class read_integer(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits += c.s[c.i++];
    if (digits.empty()) fail("expected integer");
    return mpz_class(digits);
}

RawTerm read_term(Cursor& c, int sign) {
    RawTerm t;
    t.coeff = sign;
    bool have_factor = false;
    bool expect_factor = true;
    for (;;) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            if (!expect_factor) fail("unexpected integer");
            t.coeff *= read_integer(c);
            have_factor = true;
            expect_factor = false;
        } else if (ch == 'x' || ch == 'X') {
            if (!expect_factor) fail("missing '*' before variable");
            c.take();
            char d = c.i < c.s.size() ? c.s[c.i] : '\0';
            if (!std::isdigit(static_cast<unsigned char>(d))) fail("variable must be x0..x9");
            ++c.i;
            int var = d - '0';
            int e = 1;
            if (c.peek() == '^') {
                c.take();
                mpz_class ex = read_integer(c);
                if (ex <= 0 || ex > 1000) fail("exponent out of range");
                e = static_cast<int>(ex.get_si());
            }
            t.expo[var] += e;
            t.total += e;
            if (var > t.max_var) t.max_var = var;
            have_factor = true;
            expect_factor = false;
        } else if (ch == '*') {
            if (expect_factor) fail("unexpected '*'");
            c.take();
            expect_factor = true;
        } else {
            break;
        }
    }
    if (!have_factor || expect_factor) fail("empty term");
    return t;
}

} // namespace

Form parse_form(const std::string& text, int min_vars) {
    Cursor c{text};
    std::vector<RawTerm> raw;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = ch == '-' ? -1 : 1;
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        raw.push_back(read_term(c, sign));
        first = false;
    }
    if (raw.empty()) fail("empty input");

    int max_var = -1, degree = raw[0].total;
    for (const auto& t : raw) {
        if (t.total != degree) fail("input is not homogeneous");
        if (t.max_var > max_var) max_var = t.max_var;
    }
    int nv = std::max(max_var + 1, std::max(min_vars, 2));
    Form f(nv, degree);
    for (const auto& t : raw) {
        Expo e(nv, 0);
        for (int j = 0; j < nv && j < 10; ++j) e[j] = t.expo[j];
        f.add_term(e, t.coeff);
    }
    if (f.is_zero() && degree > 0) {
        // all terms cancelled; keep the zero form of the right shape
        return Form(nv, degree);
    }
    return f;
}

std::string format_form(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending lexicographic on exponents: x0-heavy terms first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool printed = false;
        if (a != 1) {
            out << a.get_str();
            printed = true;
        }
        for (int j = 0; j < f.n_vars(); ++j) {
            if (e[j] == 0) continue;
            if (printed) out << "*";
            out << "x" << j;
            if (e[j] > 1) out << "^" << e[j];
            printed = true;
        }
        if (!printed) out << "1"; // degree-0 form
        first = false;
    }
    return out.str();
}

std::string format_matrix(const IntMat& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out << "; ";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out << " ";
            out << m(i, j).get_str();
        }
    }
    out << "]";
    return out.str();
}

} // namespace hymin
