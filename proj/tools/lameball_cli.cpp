// Command-line front end: decompose boundary fields into the E+/E-/E0
// basis, solve the Lame Dirichlet problem, evaluate kernels and Hardy
// profiles, and run the verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lameball/hardy.hpp"
#include "lameball/io.hpp"
#include "lameball/verify.hpp"

namespace lb = lameball;

namespace {

lb::Vec3 parse_point(const std::string& s) {
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    lb::Vec3 p;
    if (!(is >> p.x() >> p.y() >> p.z()))
        throw CLI::ValidationError("point", "expected \"x,y,z\"");
    return p;
}

lb::LameParameters make_params(double lambda, double mu) {
    if (mu <= 0.0)
        throw CLI::ValidationError("--mu", "eligibility requires mu > 0");
    if (2.0 * mu + lambda <= 0.0)
        throw CLI::ValidationError("--lambda", "eligibility requires 2*mu + lambda > 0");
    return {lambda, mu};
}

void print_row(const lb::Vec3& x, const lb::Vec3& u) {
    std::cout.precision(17);
    std::cout << x.x() << " " << x.y() << " " << x.z() << " " << u.x() << " " << u.y()
              << " " << u.z() << "\n";
}

int cmd_decompose(const std::string& input, const std::string& field, int L, int exactness,
                  const std::string& output) {
    lb::SphereGrid grid;
    lb::FieldSamples samples;
    if (!field.empty()) {
        grid = lb::build_grid(L + 1); // exactness 2(L+1), enough for analyze_field
        samples = lb::builtin_field(field, grid);
    } else {
        lb::SampleSet set = lb::read_samples_file(input);
        if (!set.field)
            throw std::runtime_error("sample file has no field columns to decompose");
        grid = std::move(set.grid);
        samples = std::move(*set.field);
        // the caller asserts the exactness of an external node set
        grid.exactness_degree = (exactness > 0) ? exactness : 2 * (L + 1);
    }
    const lb::VshExpansion e = lb::analyze_field(grid, samples, L);
    if (output.empty()) {
        lb::write_coefficients(std::cout, e);
    } else {
        lb::write_coefficients_file(output, e);
    }
    std::cerr.precision(12);
    std::cerr << "energy: +:" << e.energy(lb::VshFamily::Plus)
              << " -:" << e.energy(lb::VshFamily::Minus)
              << " 0:" << e.energy(lb::VshFamily::Zero) << "\n";
    return 0;
}

std::vector<lb::Vec3> load_points(const std::string& points_file, const std::string& point) {
    std::vector<lb::Vec3> pts;
    if (!point.empty()) pts.push_back(parse_point(point));
    if (!points_file.empty()) {
        std::ifstream is(points_file);
        if (!is) throw std::runtime_error("cannot open: " + points_file);
        std::string line;
        while (std::getline(is, line)) {
            std::istringstream row(line);
            lb::Vec3 p;
            if (row >> p.x() >> p.y() >> p.z()) pts.push_back(p);
        }
    }
    if (pts.empty()) throw std::runtime_error("no evaluation points given");
    return pts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral solver for the Lame Dirichlet problem in the unit ball"};
    app.require_subcommand(1);

    // decompose
    auto* dec = app.add_subcommand("decompose", "expand a boundary field in the E+/E-/E0 basis");
    std::string in_file, in_field, out_file;
    int band_limit = 4, exactness = 0;
    dec->add_option("--input", in_file, "sample file (eta1 eta2 eta3 w f1 f2 f3)");
    dec->add_option("--field", in_field, "built-in field: identity, constant-e3, vsh:<f>:<l>:<m>");
    dec->add_option("--band-limit,-L", band_limit, "band limit of the expansion");
    dec->add_option("--exactness", exactness, "declared quadrature exactness of an external grid");
    dec->add_option("--output", out_file, "coefficient file to write (stdout if omitted)");

    // solve / eval
    double lambda = 1.0, mu = 1.0;
    std::string coeffs_file, points_file, point_arg;
    auto add_common = [&](CLI::App* c, bool need_coeffs) {
        c->add_option("--lambda", lambda, "Lame lambda");
        c->add_option("--mu", mu, "Lame mu");
        if (need_coeffs) c->add_option("--coeffs", coeffs_file, "coefficient file")->required();
    };
    auto* solve = app.add_subcommand("solve", "evaluate the spectral solution at points");
    add_common(solve, true);
    solve->add_option("--points", points_file, "file with one x y z row per point");
    solve->add_option("--point", point_arg, "single point \"x,y,z\"");

    auto* ev = app.add_subcommand("eval", "evaluate the solution at one point");
    add_common(ev, true);
    ev->add_option("--point", point_arg, "point \"x,y,z\"")->required();

    // kernel
    auto* ker = app.add_subcommand("kernel", "print the elastic Poisson kernel matrix");
    std::string eta_arg;
    add_common(ker, false);
    ker->add_option("--point", point_arg, "interior point \"x,y,z\"")->required();
    ker->add_option("--eta", eta_arg, "boundary point \"x,y,z\"")->required();

    // hardy
    auto* hardy = app.add_subcommand("hardy", "radial L^p norm profile of the solution");
    double p_exp = 2.0;
    std::string radii_arg;
    add_common(hardy, true);
    hardy->add_option("--p", p_exp, "L^p exponent (>= 1)");
    hardy->add_option("--radii", radii_arg, "comma-separated radii in [0,1)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-module invariant checks");
    std::string level = "quick";
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) {
            if (in_file.empty() == in_field.empty())
                throw std::runtime_error("give exactly one of --input or --field");
            return cmd_decompose(in_file, in_field, band_limit, exactness, out_file);
        }
        if (solve->parsed() || ev->parsed()) {
            const lb::LameParameters params = make_params(lambda, mu);
            const lb::VshExpansion boundary = lb::read_vector_coefficients_file(coeffs_file);
            const lb::ElasticSolution sol = lb::solve_dirichlet(boundary, params);
            for (const lb::Vec3& x : load_points(points_file, point_arg))
                print_row(x, lb::eval_solution(sol, x));
            return 0;
        }
        if (ker->parsed()) {
            const lb::LameParameters params = make_params(lambda, mu);
            const lb::InteriorPoint x(parse_point(point_arg));
            const lb::UnitVector eta(parse_point(eta_arg).normalized());
            const lb::Mat3 k = lb::elastic_kernel(x, eta, params);
            std::cout.precision(17);
            std::cout << k << "\n";
            std::cout << "trace   " << k.trace() << "\n";
            std::cout << "3*P     " << 3.0 * lb::harmonic_poisson_kernel(x, eta) << "\n";
            return 0;
        }
        if (hardy->parsed()) {
            const lb::LameParameters params = make_params(lambda, mu);
            const lb::VshExpansion boundary = lb::read_vector_coefficients_file(coeffs_file);
            const lb::ElasticSolution sol = lb::solve_dirichlet(boundary, params);
            std::vector<double> radii;
            if (radii_arg.empty()) {
                radii = lb::default_radii();
            } else {
                std::string t = radii_arg;
                for (char& c : t)
                    if (c == ',') c = ' ';
                std::istringstream is(t);
                double r;
                while (is >> r) radii.push_back(r);
            }
            const lb::SphereGrid grid = lb::build_grid(boundary.band_limit + 4);
            const lb::RadialProfile prof = lb::radial_profile(sol, p_exp, radii, grid);
            std::cout.precision(17);
            double mx = 0.0;
            for (std::size_t i = 0; i < prof.radii.size(); ++i) {
                std::cout << prof.radii[i] << " " << prof.values[i] << "\n";
                mx = std::max(mx, prof.values[i]);
            }
            std::cout << "max " << mx << "\n";
            return 0;
        }
        if (verify->parsed()) {
            const auto results = lb::run_verification(
                level == "full" ? lb::VerifyLevel::Full : lb::VerifyLevel::Quick);
            lb::print_report(std::cout, results);
            return lb::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
