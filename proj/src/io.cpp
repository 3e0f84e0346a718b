#include "symp/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symp {

namespace {

Integer parse_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) throw parse_error("bad integer literal '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw parse_error("bad integer literal '" + s + "'");
    Integer v;
    mpz_set_str(v.get_mpz_t(), s.c_str(), 10);
    return v;
}

Rational parse_entry(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(parse_integer_token(tok));
    Integer num = parse_integer_token(tok.substr(0, slash));
    Integer den = parse_integer_token(tok.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in entry '" + tok + "'");
    return make_rational(num, den);
}

template <typename M>
std::string format_matrix_impl(const M& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

using json = nlohmann::json;

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_to_json(const IntMatrix& m) { return matrix_to_json(to_rational(m)); }

RatMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("JSON matrix: expected array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw parse_error("JSON matrix: empty rows");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw parse_error("JSON matrix: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = j[i][k];
            if (cell.is_string())
                m(i, k) = parse_entry(cell.get<std::string>());
            else if (cell.is_number_integer())
                m(i, k) = Rational(Integer(cell.get<long>()));
            else
                throw parse_error("JSON matrix: entries must be strings or integers");
        }
    }
    return m;
}

}  // namespace

RatMatrix parse_matrix(std::istream& in) {
    std::string tok;
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw parse_error("matrix header must be 'rows cols' with positive counts");
    RatMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!(in >> tok))
                throw parse_error("matrix body ended early (expected " +
                                  std::to_string(rows * cols) + " entries)");
            m(i, j) = parse_entry(tok);
        }
    if (in >> tok) throw parse_error("trailing content after matrix body: '" + tok + "'");
    return m;
}

RatMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_matrix(in);
}

std::string format_matrix(const RatMatrix& m) { return format_matrix_impl(m); }
std::string format_matrix(const IntMatrix& m) { return format_matrix_impl(m); }

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string report_to_json(const DecompositionReport& r) {
    json j;
    j["n"] = r.d.size();
    j["m"] = r.m.get_str();
    j["input"] = matrix_to_json(r.input);
    json d = json::array();
    for (const auto& di : r.d) d.push_back(di.get_str());
    j["d"] = std::move(d);
    j["sigma"] = matrix_to_json(r.sigma);
    j["sigma_prime"] = matrix_to_json(r.sigma_prime);
    json checks = json::array();
    for (const auto& c : r.verification) checks.push_back({{"check", c.name}, {"pass", c.pass}});
    j["verification"] = std::move(checks);
    if (r.with_locals) {
        json locs = json::array();
        for (const auto& loc : r.locals) {
            json exps = json::array();
            for (const auto& e : loc.exps) exps.push_back(e.get_str());
            locs.push_back({{"p", loc.p.get_str()}, {"exps", std::move(exps)}});
        }
        j["locals"] = std::move(locs);
    }
    if (r.with_words) {
        auto word_json = [](const std::vector<WordEntry>& w) {
            json arr = json::array();
            for (const auto& f : w)
                arr.push_back(
                    {{"kind", f.kind}, {"label", f.label}, {"matrix", matrix_to_json(f.matrix)}});
            return arr;
        };
        j["words"] = {{"sigma", word_json(r.sigma_word)},
                      {"sigma_prime", word_json(r.sigma_prime_word)}};
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const DecompositionReport& r) {
    std::ostringstream out;
    out << "n: " << r.d.size() << '\n';
    out << "input:\n" << format_matrix(r.input);
    out << "m: " << r.m.get_str() << '\n';
    out << "d:";
    for (const auto& di : r.d) out << ' ' << di.get_str();
    out << '\n';
    out << "sigma:\n" << format_matrix(r.sigma);
    out << "sigma_prime:\n" << format_matrix(r.sigma_prime);
    out << "verification:\n";
    for (const auto& c : r.verification)
        out << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << '\n';
    if (r.with_locals) {
        out << "locals:\n";
        for (const auto& loc : r.locals) {
            out << "  " << loc.p.get_str() << ':';
            for (const auto& e : loc.exps) out << ' ' << e.get_str();
            out << '\n';
        }
    }
    if (r.with_words) {
        auto print_word = [&out](const char* name, const std::vector<WordEntry>& w) {
            out << name << " (" << w.size() << " factors):\n";
            for (std::size_t i = 0; i < w.size(); ++i) {
                out << "  [" << i + 1 << "] " << w[i].kind << " " << w[i].label << '\n';
                std::istringstream lines(format_matrix(w[i].matrix));
                std::string line;
                while (std::getline(lines, line)) out << "    " << line << '\n';
            }
        };
        print_word("sigma word", r.sigma_word);
        print_word("sigma_prime word", r.sigma_prime_word);
    }
    return out.str();
}

ParsedDecomposition parse_decomposition_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad decomposition JSON: ") + e.what());
    }
    try {
        ParsedDecomposition dec;
        if (!j.contains("d") || !j["d"].is_array())
            throw parse_error("decomposition JSON: missing 'd'");
        for (const auto& di : j["d"]) {
            if (di.is_string())
                dec.d.push_back(parse_integer_token(di.get<std::string>()));
            else if (di.is_number_integer())
                dec.d.push_back(Integer(di.get<long>()));
            else
                throw parse_error("decomposition JSON: 'd' entries must be strings or integers");
        }
        if (!j.contains("sigma") || !j.contains("sigma_prime"))
            throw parse_error("decomposition JSON: missing witnesses");
        dec.sigma = matrix_from_json(j["sigma"]);
        dec.sigma_prime = matrix_from_json(j["sigma_prime"]);
        return dec;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad decomposition JSON: ") + e.what());
    }
}

}  // namespace symp
