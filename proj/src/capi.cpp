#include "hymin.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "forms.hpp"
#include "global.hpp"
#include "json_records.hpp"
#include "minimize_binary.hpp"
#include "minimize_curve.hpp"
#include "minimize_surface.hpp"
#include "oracle.hpp"
#include "textio.hpp"
#include "weights.hpp"

struct hymin_form {
    hymin::Form f;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return HYMIN_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return HYMIN_CONTRACT;
    } catch (const std::length_error& e) {
        g_last_error = e.what();
        return HYMIN_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HYMIN_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return HYMIN_ERROR;
    }
}

mpz_class parse_prime(const char* prime) {
    if (!prime) throw std::invalid_argument("prime string is null");
    mpz_class p;
    if (mpz_set_str(p.get_mpz_t(), prime, 10) != 0)
        throw std::invalid_argument("malformed prime");
    if (!hymin::global::is_prime(p)) throw std::invalid_argument("p is not prime");
    return p;
}

} // namespace

extern "C" {

const char* hymin_last_error(void) { return g_last_error.c_str(); }

void hymin_set_seed(uint64_t seed) { hymin::global::set_default_seed(seed); }
uint64_t hymin_get_seed(void) { return hymin::global::default_seed(); }
void hymin_set_threads(int n) { hymin::global::set_worker_threads(n); }

int hymin_form_parse(const char* text, hymin_form** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new hymin_form{hymin::parse_form(text)};
    });
}

int hymin_form_clone(const hymin_form* f, hymin_form** out) {
    return guarded([&] {
        if (!f || !out) throw std::invalid_argument("null argument");
        *out = new hymin_form{f->f};
    });
}

void hymin_form_free(hymin_form* f) { delete f; }

int hymin_form_to_string(const hymin_form* f, char** out) {
    return guarded([&] {
        if (!f || !out) throw std::invalid_argument("null argument");
        *out = dup_string(hymin::format_form(f->f));
    });
}

void hymin_string_free(char* s) { std::free(s); }

int hymin_form_degree(const hymin_form* f) { return f ? f->f.degree() : -1; }
int hymin_form_num_vars(const hymin_form* f) { return f ? f->f.n_vars() : -1; }

int hymin_weights(int n, int d, int raw, char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        std::vector<hymin::WeightVector> vs;
        if (raw) {
            if (n != 2) throw std::invalid_argument("--raw requires n = 2");
            vs = hymin::weights::n2_complete_set(d);
        } else {
            vs = hymin::weights::minimal_complete_set(n, d, hymin::global::worker_threads()).vectors;
        }
        std::ostringstream os;
        for (const auto& w : vs) {
            os << "[";
            for (std::size_t i = 0; i < w.w.size(); ++i) {
                if (i) os << ",";
                os << w.w[i];
            }
            os << "]\n";
        }
        *out = dup_string(os.str());
    });
}

int hymin_invariants(const hymin_form* f, char** json_out) {
    return guarded([&] {
        if (!f || !json_out) throw std::invalid_argument("null argument");
        *json_out = dup_string(hymin::records::invariants_json(f->f));
    });
}

int hymin_minimize(const hymin_form* f, const char* prime, const char* strategy, char** json_out) {
    return guarded([&] {
        if (!f || !json_out) throw std::invalid_argument("null argument");
        mpz_class p = parse_prime(prime);
        const hymin::Form& form = f->f;
        hymin::Form out(form.n_vars(), form.degree());
        hymin::TransformRecord rec;
        if (form.n_vars() == 2) {
            auto [g, r] = hymin::binary::minimize(form, p);
            out = g;
            rec = r;
        } else if (form.n_vars() == 3) {
            hymin::curve::Strategy s = hymin::curve::Strategy::dfs;
            if (strategy) {
                std::string str(strategy);
                if (str == "bfs")
                    s = hymin::curve::Strategy::bfs;
                else if (str == "best")
                    s = hymin::curve::Strategy::best;
                else if (str != "dfs" && !str.empty())
                    throw std::invalid_argument("strategy must be dfs, bfs or best");
            }
            auto [g, r] = hymin::curve::minimize(form, p, s);
            out = g;
            rec = r;
        } else if (form.n_vars() == 4) {
            if (form.degree() != 3)
                throw std::invalid_argument("quaternary minimization supports cubics only");
            auto [g, r] = hymin::surface::minimize(form, p);
            out = g;
            rec = r;
        } else {
            throw std::invalid_argument("minimize supports 2, 3 or 4 variables");
        }
        bool moved = rec.scale_exp > 0 || !rec.matrix.is_identity();
        *json_out = dup_string(hymin::records::minimize_result_json(out, rec, true, moved));
    });
}

int hymin_minimize_global(const hymin_form* f, const char* primes_csv, char** json_out) {
    return guarded([&] {
        if (!f || !json_out) throw std::invalid_argument("null argument");
        std::optional<std::vector<mpz_class>> primes;
        if (primes_csv && *primes_csv) {
            std::vector<mpz_class> ps;
            std::stringstream ss(primes_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                ps.push_back(parse_prime(tok.c_str()));
            }
            primes = std::move(ps);
        }
        auto [g, rec] = hymin::global::minimize_global(f->f, primes);
        *json_out = dup_string(hymin::records::global_result_json(g, rec));
    });
}

int hymin_detect_primes(const hymin_form* f, char** json_out) {
    return guarded([&] {
        if (!f || !json_out) throw std::invalid_argument("null argument");
        std::vector<mpz_class> primes;
        if (f->f.n_vars() == 2)
            primes = hymin::global::candidate_primes_binary(f->f);
        else if (f->f.n_vars() == 3)
            primes = hymin::global::candidate_primes_ternary(f->f);
        else
            throw std::invalid_argument("detect-primes supports 2 or 3 variables");
        *json_out = dup_string(hymin::records::primes_json(primes));
    });
}

int hymin_reduce(const hymin_form* f, char** json_out) {
    return guarded([&] {
        if (!f || !json_out) throw std::invalid_argument("null argument");
        auto [g, t] = hymin::global::adhoc_reduce(f->f);
        *json_out = dup_string(hymin::records::reduce_result_json(g, t));
    });
}

int hymin_oracle_minimize(const hymin_form* f, const char* prime, unsigned long max_lattices,
                          char** json_out) {
    return guarded([&] {
        if (!f || !json_out) throw std::invalid_argument("null argument");
        mpz_class p = parse_prime(prime);
        unsigned long cap = max_lattices ? max_lattices : 1000000;
        auto [g, rec] = hymin::oracle::minimize(f->f, p, cap);
        bool moved = rec.scale_exp > 0 || !rec.matrix.is_identity();
        *json_out = dup_string(hymin::records::minimize_result_json(g, rec, true, moved));
    });
}

} // extern "C"
