// cellkit: command-line front end. Every command writes one JSON document to stdout.
// Failures print {"code", "message", "context"} and exit nonzero.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellkit/cache.hpp"
#include "cellkit/json_io.hpp"
#include "checks/criteria.hpp"

using namespace cellkit;
using json_io::json;

namespace {

PeriodicMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open matrix file", path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("ParseError", e.what(), path);
    }
    return json_io::parse_matrix(j);
}

std::pair<int, int> parse_range(const std::vector<int>& r) {
    if (r.size() == 1) return {r[0], r[0]};
    if (r.size() == 2 && r[0] <= r[1]) return {r[0], r[1]};
    throw Error("InvalidArgument", "k-range must be K or LO,HI with LO <= HI");
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    if (s == "two-sided") return Side::TwoSided;
    throw Error("InvalidArgument", "side must be left, right or two-sided", s);
}

template <class Label, class Hash, class Encode, class Fiber>
json cells_report(const CellOracle<Label, Hash>& o, Side side, Encode encode, Fiber fiber) {
    json cells = json::array();
    for (const auto& comp : o.cell_indices(side)) {
        json labels = json::array();
        bool closed = true;
        for (int i : comp) {
            labels.push_back(encode(o.basis()[i]));
            if (side == Side::TwoSided)
                closed = closed && !o.escapes(i, Side::Left) && !o.escapes(i, Side::Right);
            else
                closed = closed && !o.escapes(i, side);
        }
        cells.push_back({{"labels", labels},
                         {"partition", json_io::partition(fiber(o.basis()[comp.front()]))},
                         {"closedInWindow", closed}});
    }
    return {{"side", to_string(side)}, {"labels", o.size()}, {"escapingProducts", o.escape_count()}, {"cells", cells}};
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cells of affine Hecke and q-Schur algebras"};
    app.require_subcommand(1);

    int D = 0, n = 0, radius = 4;
    std::vector<int> window, shape, k_range{0};
    std::string matrix_file, a_file, b_file, basis = "can", side = "two-sided", level, suite = "all", budget = "desk";

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig element C_w in the T-basis");
    kl->add_option("--D", D)->required();
    kl->add_option("--window", window)->required()->delimiter(',');

    auto* sigma = app.add_subcommand("sigma", "Partition of the two-sided cell of w");
    sigma->add_option("--D", D)->required();
    sigma->add_option("--window", window)->required()->delimiter(',');

    auto* rho = app.add_subcommand("rho", "Partition of the cell of a periodic matrix");
    rho->add_option("--matrix-file", matrix_file)->required();

    auto* triple = app.add_subcommand("triple", "Row sums, column sums and longest double-coset element");
    triple->add_option("--matrix-file", matrix_file)->required();

    auto* mul = app.add_subcommand("mul", "Structure constants of a product of basis elements");
    mul->add_option("--basis", basis)->check(CLI::IsMember({"std", "can"}));
    mul->add_option("--a-file", a_file)->required();
    mul->add_option("--b-file", b_file)->required();

    auto* cells = app.add_subcommand("cells", "Cells of a ball, from the structure-constant oracle");
    cells->add_option("--D", D)->required();
    cells->add_option("--n", n, "q-Schur view with n blocks; omit for the Hecke view");
    cells->add_option("--radius", radius);
    cells->add_option("--k-range", k_range)->delimiter(',');
    cells->add_option("--side", side)->check(CLI::IsMember({"left", "right", "two-sided"}));

    auto* tableaux = app.add_subcommand("tableaux", "Tableaux indexing the left cells of a two-sided cell");
    tableaux->add_option("--n", n)->required();
    tableaux->add_option("--shape", shape)->required()->delimiter(',');

    auto* count = app.add_subcommand("count-left-cells", "Number of left cells in a two-sided cell");
    count->add_option("--n", n)->required();
    count->add_option("--shape", shape)->required()->delimiter(',');

    auto* afn = app.add_subcommand("afn", "a-function");
    afn->add_option("--level", level)->required()->check(CLI::IsMember({"W", "schur", "udot"}));
    afn->add_option("--D", D);
    afn->add_option("--window", window)->delimiter(',');
    afn->add_option("--matrix-file", matrix_file);

    auto* gam = app.add_subcommand("gamma", "Nonzero asymptotic structure constants within a ball");
    gam->add_option("--D", D)->required();
    gam->add_option("--n", n)->required();
    gam->add_option("--radius", radius);

    auto* jring = app.add_subcommand("jring", "Products of basis elements of one asymptotic cell ring");
    jring->add_option("--D", D)->required();
    jring->add_option("--n", n)->required();
    jring->add_option("--shape", shape)->required()->delimiter(',');
    jring->add_option("--radius", radius);

    auto* check = app.add_subcommand("check", "Run a check suite");
    check->add_option("--suite", suite)->check(CLI::IsMember(checks::suites()));
    check->add_option("--budget", budget)->check(CLI::IsMember({"quick", "desk", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print(json_io::error(Error("UsageError", e.what(), app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name())));
        return 2;
    }

    try {
        const auto cache = KlCache::from_env();

        if (*kl) {
            HeckeAlgebra H(D);
            const AffinePermutation w(D, window);
            if (cache) cache->ensure(H, w.length());
            print({{"w", json_io::window(w)}, {"terms", json_io::hecke_element(H.kl_element(w))}});
        } else if (*sigma) {
            print(json_io::partition(sigma_partition(AffinePermutation(D, window))));
        } else if (*rho) {
            print(json_io::partition(rho_partition(read_matrix(matrix_file))));
        } else if (*triple) {
            const auto t = to_triple(read_matrix(matrix_file));
            print({{"r", t.a}, {"c", t.b}, {"window", json_io::window(t.w)}});
        } else if (*mul) {
            const auto A = read_matrix(a_file), B = read_matrix(b_file);
            if (A.D() != B.D() || A.n() != B.n()) throw Error("InvalidArgument", "matrices have different D or n");
            SchurAlgebra S(A.D(), A.n());
            if (A.col_sums() != B.row_sums()) throw Error("Incompatible", "c(A) != r(B)", A.to_string() + " * " + B.to_string());
            print(json_io::structure_constants(basis == "std" ? S.eta(A, B) : S.nu(A, B)));
        } else if (*cells) {
            const auto [lo, hi] = parse_range(k_range);
            const Side sd = parse_side(side);
            if (n == 0) {
                auto H = std::make_shared<HeckeAlgebra>(D);
                if (cache) cache->ensure(*H, radius);
                const CellOracle<AffinePermutation, AffinePermutationHash> o(hecke_view(H, ball_enumerate(D, radius, lo, hi)));
                print(cells_report(o, sd, json_io::window, sigma_partition));
            } else {
                auto S = std::make_shared<SchurAlgebra>(D, n);
                const CellOracle<PeriodicMatrix, PeriodicMatrixHash> o(schur_view(S, S->ball(radius, lo, hi)));
                print(cells_report(o, sd, json_io::matrix, rho_partition));
            }
        } else if (*tableaux) {
            json out = json::array();
            for (const auto& t : tableaux_enumerate(n, Partition(shape))) out.push_back(json_io::tableau(t));
            print(out);
        } else if (*count) {
            print(json_io::big(BigInt(left_cell_count(n, Partition(shape)))));
        } else if (*afn) {
            if (level == "W") {
                if (window.empty() || D == 0) throw Error("InvalidArgument", "--level W needs --D and --window");
                print(HeckeAlgebra::a_prime(AffinePermutation(D, window)));
            } else {
                if (matrix_file.empty()) throw Error("InvalidArgument", "--level " + level + " needs --matrix-file");
                const auto A = read_matrix(matrix_file);
                if (level == "schur") {
                    SchurAlgebra S(A.D(), A.n());
                    print(S.a_value(A));
                } else {
                    if (!is_aperiodic(A)) throw Error("NotAperiodic", "udot level is defined on aperiodic labels", A.to_string());
                    const auto [mu, ups] = udot_weights(A);
                    print(a_udot(mu, ups));
                }
            }
        } else if (*gam) {
            SchurAlgebra S(D, n);
            const auto ball = S.ball(radius);
            json out = json::array();
            for (const auto& A : ball)
                for (const auto& B : ball)
                    for (const auto& [C, p] : S.nu(A, B)) {
                        const BigInt g = gamma(S, A, B, C);
                        if (g != 0)
                            out.push_back({{"A", json_io::matrix(A)}, {"B", json_io::matrix(B)}, {"C", json_io::matrix(C)},
                                           {"gamma", json_io::big(g)}});
                    }
            print(out);
        } else if (*jring) {
            SchurAlgebra S(D, n);
            const Partition lam(shape);
            json dist = json::array();
            for (const auto& E : distinguished_in_cell(S, lam)) dist.push_back(json_io::matrix(E));
            std::vector<PeriodicMatrix> labels;
            for (const auto& A : S.ball(radius))
                if (rho_partition(A) == lam) labels.push_back(A);
            json products = json::array();
            for (const auto& A : labels)
                for (const auto& B : labels) {
                    const auto p = j_multiply(S, JElement::basis(lam, A), JElement::basis(lam, B));
                    if (p.is_zero()) continue;
                    json terms = json::array();
                    for (const auto& [C, c] : p.terms()) terms.push_back({{"matrix", json_io::matrix(C)}, {"coeff", json_io::big(c)}});
                    products.push_back({{"a", json_io::matrix(A)}, {"b", json_io::matrix(B)}, {"product", terms}});
                }
            print({{"cell", json_io::partition(lam)}, {"distinguished", dist}, {"products", products}});
        } else if (*check) {
            checks::Context ctx(checks::budget_named(budget));
            json rows = json::array();
            bool ok = true;
            for (int id : checks::suites().at(suite)) {
                const auto r = checks::run_criterion(checks::criteria().at(id - 1), ctx);
                ok = ok && r.passed;
                std::cerr << (r.passed ? "PASS " : "FAIL ") << id << " " << r.title << " (" << r.seconds << " s)\n";
                rows.push_back({{"id", id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
            }
            print({{"suite", suite}, {"budget", budget}, {"passed", ok}, {"criteria", rows}});
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        print(json_io::error(e));
        return 1;
    } catch (const std::exception& e) {
        print(json_io::error(Error("InternalError", e.what())));
        return 1;
    }
    return 0;
}
