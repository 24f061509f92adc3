#include "hlv/cli.hpp"

#include <CLI11.hpp>

#include "hlv/checks.hpp"
#include "hlv/hlv.hpp"
#include "hlv/macdonald.hpp"
#include "hlv/seriesalg.hpp"
#include "hlv/textio.hpp"

namespace hlv {

namespace {

// entries like "1+x^2", "x", "0"; rows separated by ';', entries by ','
TSMatrix parse_matrix(const std::string& text, int p, int prec) {
    std::vector<std::vector<std::vector<int>>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<std::vector<int>> entries;
        std::stringstream rs(row);
        std::string entry;
        while (std::getline(rs, entry, ',')) {
            std::vector<int> coeffs;
            std::string term;
            int sign = 1;
            auto flush = [&](const std::string& t, int sg) {
                if (t.empty()) return;
                int c = 1, d = 0;
                size_t xpos = t.find('x');
                if (xpos == std::string::npos) {
                    c = std::stoi(t);
                } else {
                    if (xpos > 0) c = std::stoi(t.substr(0, xpos));
                    size_t caret = t.find('^', xpos);
                    d = caret == std::string::npos ? 1 : std::stoi(t.substr(caret + 1));
                }
                if (d >= static_cast<int>(coeffs.size())) coeffs.resize(d + 1, 0);
                coeffs[d] += sg * c;
            };
            for (char ch : entry) {
                if (ch == ' ') continue;
                if (ch == '+' || ch == '-') {
                    flush(term, sign);
                    term.clear();
                    sign = ch == '-' ? -1 : 1;
                } else {
                    term += ch;
                }
            }
            flush(term, sign);
            entries.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(entries));
    }
    int n = static_cast<int>(rows.size());
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw Error("matrix must be square");
    }
    TSMatrix m(n, n, p, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = TSeries::from_coeffs(p, prec, rows[i][j]);
    return m;
}

void print_symfunc(const SymFunc& f, bool json, std::ostream& out) {
    if (json) out << to_json(f).dump() << "\n";
    else out << to_text(f) << "\n";
}

int run_verify(const std::string& suite, int p, int max_n, std::ostream& out) {
    std::vector<int> primes = p == 0 ? std::vector<int>{2, 3} : std::vector<int>{p};
    std::vector<CheckCase> cases;
    if (suite == "flags") cases = check_flags_suite(max_n == 0 ? 4 : max_n, primes);
    else if (suite == "mass") cases = check_mass_suite(4, primes);
    else if (suite == "grass") cases = check_grass_suite(primes);
    else if (suite == "hall") cases = check_hall_suite(max_n == 0 ? 4 : max_n, primes);
    else if (suite == "p1-two-point") cases = check_p1_two_point_suite(3, 3);
    else if (suite == "p1-parabolic") cases = check_p1_parabolic_suite(3);
    else if (suite == "macdonald") cases = check_macdonald_axioms_suite(max_n == 0 ? 5 : max_n);
    else if (suite == "hlv") {
        cases = check_hlv_integrality_suite(3);
        auto more = check_poincare_suite();
        cases.insert(cases.end(), more.begin(), more.end());
    } else {
        throw Error("unknown suite: " + suite);
    }
    for (auto& c : cases) {
        nlohmann::json line{{"suite", suite}, {"case", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) line["detail"] = c.detail;
        out << line.dump() << "\n";
    }
    return all_ok(cases) ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symmetric-function calculus and finite-field verification"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, mults_text, matrix_text, suite;
    int genus = 0, punctures = 0, tmax = 3, rank = 1, dmax = 3, prime = 0, max_n = 0, prec = 4;
    bool json = false, t0 = false;

    auto* mac = app.add_subcommand("macdonald", "modified Macdonald polynomial in the m basis");
    mac->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    mac->add_flag("--t0", t0, "specialize t = 0");
    mac->add_flag("--json", json);

    auto* hl = app.add_subcommand("hall-littlewood", "Hall-Littlewood polynomial (t = 0)");
    hl->add_option("--lambda", lambda_text)->required();
    hl->add_flag("--json", json);

    auto* ker = app.add_subcommand("kernel", "partition kernel of a genus-g curve with k punctures");
    ker->add_option("--genus", genus)->required();
    ker->add_option("--punctures", punctures)->required();
    ker->add_option("--tmax", tmax, "truncation order in T");
    ker->add_flag("--json", json);

    auto* hlog = app.add_subcommand("hlog", "certified plethystic logarithm of the kernel");
    hlog->add_option("--genus", genus)->required();
    hlog->add_option("--punctures", punctures)->required();
    hlog->add_option("--tmax", tmax);
    hlog->add_flag("--json", json);

    auto* poi = app.add_subcommand("poincare", "Poincare polynomial of a generic character variety");
    poi->add_option("--genus", genus)->required();
    poi->add_option("--rank", rank)->required();
    poi->add_option("--mults", mults_text, "eigenvalue multiplicities, e.g. \"1,1;1,1;1,1\"");
    poi->add_flag("--json", json);

    auto* spr = app.add_subcommand("springer", "weighted point count of the affine fiber");
    spr->add_option("--lambda", lambda_text)->required();
    spr->add_option("--mu", mu_text)->required();
    spr->add_option("--dmax", dmax, "truncation order in t");
    spr->add_flag("--json", json);

    auto* cls = app.add_subcommand("classify", "type and degree of a nilpotent series matrix");
    cls->add_option("--matrix", matrix_text, "rows ';'-separated, entries polynomials in x")->required();
    cls->add_option("--p", prime, "prime (2, 3 or 5)")->required();
    cls->add_option("--m", prec, "working precision");
    cls->add_flag("--json", json);

    auto* ver = app.add_subcommand("verify", "run a brute-force verification suite");
    ver->add_option("--suite", suite,
                    "flags|mass|grass|hall|p1-two-point|p1-parabolic|macdonald|hlv")
        ->required();
    ver->add_option("--p", prime, "restrict to one prime");
    ver->add_option("--max", max_n, "size cap");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (mac->parsed()) {
            Partition la = parse_partition(lambda_text);
            print_symfunc(t0 ? hall_littlewood(la) : macdonald_htilde(la), json, out);
        } else if (hl->parsed()) {
            print_symfunc(hall_littlewood(parse_partition(lambda_text)), json, out);
        } else if (ker->parsed() || hlog->parsed()) {
            CurveData c = CurveData::symbolic(genus, punctures);
            MultiSymSeries s = ker->parsed() ? hlv_kernel(c, tmax) : hlv_H(c, tmax);
            if (json) out << to_json(s).dump() << "\n";
            else out << to_text(s);
        } else if (poi->parsed()) {
            ParabolicData pd;
            pd.rank = rank;
            pd.mults = mults_text.empty() ? std::vector<std::vector<int>>{} : parse_mults(mults_text);
            Scalar value = poincare_polynomial(genus, pd);
            if (json) {
                out << nlohmann::json{{"dim", dim_moduli(genus, pd)}, {"poincare", to_json(value)}}
                           .dump()
                    << "\n";
            } else {
                out << to_text(value) << "\n";
            }
        } else if (spr->parsed()) {
            Partition la = parse_partition(lambda_text), mu = parse_partition(mu_text);
            auto series = springer_count(la, mu, dmax);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (auto& c : series) arr.push_back(to_json(c));
                out << arr.dump() << "\n";
            } else {
                for (int j = 0; j < static_cast<int>(series.size()); ++j) {
                    out << "t^" << j << ": " << to_text(series[j]) << "\n";
                }
            }
        } else if (cls->parsed()) {
            if (prime != 2 && prime != 3 && prime != 5) throw Error("p must be 2, 3 or 5");
            TSMatrix m = parse_matrix(matrix_text, prime, prec);
            ClassifyResult r = classify(m);
            Partition la(r.type);
            if (json) {
                out << nlohmann::json{{"type", la.parts()},
                                      {"degree", r.degree},
                                      {"worst_pole", r.worst_pole}}
                           .dump()
                    << "\n";
            } else {
                out << "type = " << to_text(la) << "\n";
                out << "degree = " << r.degree << "\n";
            }
        } else if (ver->parsed()) {
            return run_verify(suite, prime, max_n, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace hlv
