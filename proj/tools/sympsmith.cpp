// sympsmith: exact symplectic Smith normal form toolkit.
//
// Subcommands: decompose, snf, verify, local, gen, coset-eq.
// Exit codes: 0 success, 1 semantic failure (failed verification / coset
// mismatch / internal check), 2 input error, 3 domain error (not symplectic).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symp/exactcore.hpp"
#include "symp/io.hpp"
#include "symp/kernels.hpp"
#include "symp/localdata.hpp"
#include "symp/rng.hpp"
#include "symp/snf.hpp"
#include "symp/sympgen.hpp"
#include "symp/sympsnf.hpp"

namespace {

using namespace symp;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kDomainError = 3;

std::vector<WordEntry> to_entries(const SpWord& w) {
    std::vector<WordEntry> out;
    out.reserve(w.factors().size());
    for (const auto& f : w.factors())
        out.push_back({to_string(f.kind), f.label, f.elem.matrix()});
    return out;
}

// Exit 3 with the location of the first nonzero defect entry (1-based).
int report_not_symplectic(const RatMatrix& g) {
    if (!g.square() || g.rows() % 2 != 0 || g.rows() == 0) {
        std::cerr << "error: not symplectic: matrix is not 2n x 2n\n";
        return kDomainError;
    }
    RatMatrix def = symplectic_defect(g);
    for (std::size_t i = 0; i < def.rows(); ++i)
        for (std::size_t j = 0; j < def.cols(); ++j)
            if (def(i, j) != 0) {
                std::cerr << "error: not symplectic: defect(" << i + 1 << "," << j + 1
                          << ") = " << rational_str(def(i, j)) << "\n";
                return kDomainError;
            }
    std::cerr << "error: not symplectic\n";
    return kDomainError;
}

int cmd_decompose(const std::string& path, bool json_out, bool with_locals, bool with_words) {
    RatMatrix g = parse_matrix_file(path);
    if (!is_symplectic(g)) return report_not_symplectic(g);

    TracedSympSmith traced = symp_smith_traced(g);
    DecompositionReport report;
    report.input = g;
    report.m = denominator_scale(g).m;
    report.d = traced.dec.d;
    report.sigma = traced.dec.sigma.matrix();
    report.sigma_prime = traced.dec.sigma_prime.matrix();
    report.verification = verify_decomposition(g, traced.dec);
    if (!all_pass(report.verification)) {
        std::cerr << "internal error: decomposition failed verification; not printing it\n";
        return kFail;
    }
    if (with_locals) {
        report.with_locals = true;
        for (const auto& p : support_primes_of_chain(report.d))
            report.locals.push_back(local_exponents_of_chain(report.d, p));
    }
    if (with_words) {
        report.with_words = true;
        report.sigma_word = to_entries(traced.sigma_word);
        report.sigma_prime_word = to_entries(traced.sigma_prime_word);
    }
    std::cout << (json_out ? report_to_json(report) : report_to_text(report));
    return kOk;
}

int cmd_snf(const std::string& path, bool json_out) {
    RatMatrix parsed = parse_matrix_file(path);
    if (!is_integral(parsed)) {
        std::cerr << "error: snf needs an integer matrix (rational entries present)\n";
        return kInputError;
    }
    IntMatrix g = to_integral(parsed);
    SnfDecomposition dec = smith_normal_form(g);

    bool ok = g == dec.u * snf_core(dec, g.rows(), g.cols()) * dec.v;
    Integer du = kernels::determinant(dec.u), dv = kernels::determinant(dec.v);
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    std::vector<std::pair<std::string, bool>> oracle;
    Integer prod = 1;
    for (std::size_t k = 1; k <= dec.divisors.size(); ++k) {
        prod *= dec.divisors[k - 1];
        bool match = prod == minor_gcd_divisors(g, k);
        oracle.emplace_back("minor-gcd k=" + std::to_string(k), match);
        ok = ok && match;
    }

    if (json_out) {
        json j;
        json d = json::array();
        for (const auto& a : dec.divisors) d.push_back(a.get_str());
        j["divisors"] = std::move(d);
        auto mat = [](const IntMatrix& m) {
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                json row = json::array();
                for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(m(i, jj).get_str());
                rows.push_back(std::move(row));
            }
            return rows;
        };
        j["u"] = mat(dec.u);
        j["v"] = mat(dec.v);
        json checks = json::array();
        checks.push_back({{"check", "reconstruction-unimodular"}, {"pass", ok}});
        for (const auto& [name, pass] : oracle) checks.push_back({{"check", name}, {"pass", pass}});
        j["verification"] = std::move(checks);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "divisors:";
        for (const auto& a : dec.divisors) std::cout << ' ' << a.get_str();
        std::cout << "\nu:\n" << format_matrix(dec.u) << "v:\n" << format_matrix(dec.v);
        for (const auto& [name, pass] : oracle)
            std::cout << name << ": " << (pass ? "PASS" : "FAIL") << '\n';
        std::cout << "reconstruction: " << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kOk : kFail;
}

int cmd_verify(const std::string& g_path, const std::string& dec_path, bool json_out) {
    RatMatrix g = parse_matrix_file(g_path);
    ParsedDecomposition dec = parse_decomposition_json(dec_path);
    const bool dims_ok = g.square() && g.rows() % 2 == 0 && g.rows() > 0 &&
                         dec.sigma.rows() == g.rows() && dec.sigma.cols() == g.cols() &&
                         dec.sigma_prime.rows() == g.rows() &&
                         dec.sigma_prime.cols() == g.cols() && dec.d.size() == g.rows() / 2;
    if (!dims_ok) {
        std::cerr << "error: decomposition dimensions do not match the matrix\n";
        return kInputError;
    }
    auto checks = verify_decomposition(g, dec.sigma, dec.d, dec.sigma_prime);
    if (json_out) {
        json j = json::array();
        for (const auto& c : checks) j.push_back({{"check", c.name}, {"pass", c.pass}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    return all_pass(checks) ? kOk : kFail;
}

int cmd_local(const std::string& path, const std::string& primes_arg, bool support,
              bool json_out) {
    RatMatrix g = parse_matrix_file(path);
    if (!is_symplectic(g)) return report_not_symplectic(g);
    std::vector<Integer> d = double_coset_invariant(g);

    std::vector<Integer> primes;
    if (support) {
        primes = support_primes_of_chain(d);
    } else {
        std::istringstream in(primes_arg);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            Integer p;
            if (tok.empty() || mpz_set_str(p.get_mpz_t(), tok.c_str(), 10) != 0) {
                std::cerr << "error: bad prime '" << tok << "'\n";
                return kInputError;
            }
            if (!is_prime(p)) {
                std::cerr << "error: " << p.get_str() << " is not prime\n";
                return kInputError;
            }
            primes.push_back(p);
        }
    }

    json j = json::array();
    for (const auto& p : primes) {
        LocalCartanExponents loc = local_exponents_of_chain(d, p);
        if (json_out) {
            json exps = json::array();
            for (const auto& e : loc.exps) exps.push_back(e.get_str());
            j.push_back({{"p", p.get_str()}, {"exps", std::move(exps)}});
        } else {
            std::cout << p.get_str() << ':';
            for (const auto& e : loc.exps) std::cout << ' ' << e.get_str();
            std::cout << '\n';
        }
    }
    if (json_out) std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& kind, std::size_t length,
            long dmax) {
    if (kind == "spz") {
        std::cout << format_matrix(random_sp(n, length, seed).product().matrix());
        return kOk;
    }
    // spq: plant sigma * diag(d, d^{-1}) * sigma' with a random chain d.
    Rng rng(seed);
    const std::uint64_t seed_l = rng.next();
    const std::uint64_t seed_r = rng.next();
    static const long factors[] = {1, 1, 2, 2, 3, 4, 5};
    std::vector<Integer> d(n);
    long cur = rng.uniform(1, std::min(8L, dmax));
    d[0] = cur;
    for (std::size_t i = 1; i < n; ++i) {
        long f = factors[rng.uniform(0, 6)];
        if (cur <= dmax / f) cur *= f;
        d[i] = cur;
    }
    RatMatrix g = to_rational(random_sp(n, length, seed_l).product().matrix()) * diag_d_dinv(d) *
                  to_rational(random_sp(n, length, seed_r).product().matrix());
    std::cout << format_matrix(g);
    return kOk;
}

int cmd_coset_eq(const std::string& path1, const std::string& path2, bool json_out) {
    RatMatrix g = parse_matrix_file(path1);
    RatMatrix h = parse_matrix_file(path2);
    if (!is_symplectic(g)) return report_not_symplectic(g);
    if (!is_symplectic(h)) return report_not_symplectic(h);
    std::vector<Integer> dg = double_coset_invariant(g);
    std::vector<Integer> dh = double_coset_invariant(h);
    const bool equal = dg == dh;
    if (json_out) {
        json j;
        json a = json::array(), b = json::array();
        for (const auto& x : dg) a.push_back(x.get_str());
        for (const auto& x : dh) b.push_back(x.get_str());
        j["d1"] = std::move(a);
        j["d2"] = std::move(b);
        j["equal"] = equal;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "d1:";
        for (const auto& x : dg) std::cout << ' ' << x.get_str();
        std::cout << "\nd2:";
        for (const auto& x : dh) std::cout << ' ' << x.get_str();
        std::cout << "\nequal: " << (equal ? "yes" : "no") << '\n';
    }
    return equal ? kOk : kFail;
}

template <typename F>
int run_guarded(F&& f) {
    try {
        return f();
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const not_symplectic& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const not_in_mp& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sympsmith: symplectic Smith normal form over the rationals, exactly"};
    app.require_subcommand(1);
    app.fallthrough();  // let the output flags appear after the subcommand too
    bool json_out = false, text_out = false;
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_flag("--text", text_out, "human-readable output (default)");

    std::string path, path2, primes_arg;
    bool with_locals = false, with_words = false, support = false;

    auto* decompose = app.add_subcommand("decompose", "g = sigma diag(d, d^-1) sigma'");
    decompose->add_option("path", path, "matrix file")->required();
    decompose->add_flag("--locals", with_locals, "include per-prime exponents");
    decompose->add_flag("--words", with_words, "include witness factor words");

    auto* snf = app.add_subcommand("snf", "classical Smith normal form with witnesses");
    snf->add_option("path", path, "integer matrix file")->required();

    auto* verify = app.add_subcommand("verify", "check a stored decomposition against g");
    verify->add_option("g_path", path, "matrix file")->required();
    verify->add_option("dec_path", path2, "decomposition JSON (decompose --json output)")
        ->required();

    auto* local = app.add_subcommand("local", "per-prime Cartan exponents");
    local->add_option("path", path, "matrix file")->required();
    auto* primes_opt = local->add_option("--primes", primes_arg, "comma-separated primes");
    auto* support_opt = local->add_flag("--support", support, "use the primes dividing d_n");
    primes_opt->excludes(support_opt);

    auto* gen = app.add_subcommand("gen", "emit a seeded test matrix");
    std::size_t n = 1, length = 20;
    std::uint64_t seed = 1;
    long dmax = 100;
    std::string kind = "spq";
    gen->add_option("n", n, "half-dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--kind", kind, "spz | spq")->check(CLI::IsMember({"spz", "spq"}));
    gen->add_option("--length", length, "generator word length");
    gen->add_option("--dmax", dmax, "bound on d_n (spq)")->check(CLI::PositiveNumber);

    auto* coset = app.add_subcommand("coset-eq", "same double coset?");
    coset->add_option("path1", path, "matrix file")->required();
    coset->add_option("path2", path2, "matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (local->parsed() && !support && primes_arg.empty()) {
        std::cerr << "error: local needs --primes or --support\n";
        return kInputError;
    }

    return run_guarded([&]() -> int {
        if (decompose->parsed()) return cmd_decompose(path, json_out, with_locals, with_words);
        if (snf->parsed()) return cmd_snf(path, json_out);
        if (verify->parsed()) return cmd_verify(path, path2, json_out);
        if (local->parsed()) return cmd_local(path, primes_arg, support, json_out);
        if (gen->parsed()) return cmd_gen(n, seed, kind, length, dmax);
        if (coset->parsed()) return cmd_coset_eq(path, path2, json_out);
        return kInputError;
    });
}
