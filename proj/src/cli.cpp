#include "floer/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "floer/chain_complex.hpp"
#include "floer/disks.hpp"
#include "floer/gf2.hpp"
#include "floer/induction.hpp"
#include "floer/novikov.hpp"
#include "floer/signvec.hpp"
#include "floer/volume.hpp"

namespace floer {

namespace {

using Json = nlohmann::ordered_json;

PointCode parse_point(const std::string& text, int k) {
    if (text.empty()) {
        throw DomainConstraintError("empty point mask");
    }
    if (text.size() > 2 && (text[0] == '0') && (text[1] == 'b' || text[1] == 'B')) {
        std::uint32_t mask = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') {
                throw DomainConstraintError("binary mask may contain only 0/1: " + text);
            }
            mask = (mask << 1) | static_cast<std::uint32_t>(text[i] - '0');
        }
        return point_code(k, mask);
    }
    if (text.find_first_not_of("+-") == std::string::npos) {
        const PointCode p = from_sign_string(text);
        if (p.k != k) {
            throw DimensionMismatchError("sign string length " +
                                         std::to_string(p.k) +
                                         " does not match k=" + std::to_string(k));
        }
        return p;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return point_code(k, static_cast<std::uint32_t>(v));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw DomainConstraintError("cannot parse point mask: " + text);
    }
}

std::string csv_number(const Json& v) { return v.dump(); }

void emit_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<Json>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "");
            if (row[i].is_string())
                out << row[i].get<std::string>();
            else
                out << csv_number(row[i]);
        }
        out << '\n';
    }
}

// Flat single-object output in the selected format.
void emit_object(std::ostream& out, const Json& obj, const std::string& format) {
    if (format == "csv") {
        std::vector<std::string> header;
        std::vector<Json> row;
        for (const auto& [key, value] : obj.items()) {
            header.push_back(key);
            row.push_back(value);
        }
        emit_csv(out, header, {row});
    } else {
        out << obj.dump() << '\n';
    }
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BlaschkeDisk random_disk(const std::vector<int>& degrees, std::uint64_t seed) {
    if (degrees.size() < 2) {
        throw DomainConstraintError("need at least two coordinate degrees");
    }
    std::mt19937_64 rng(seed);
    std::vector<BlaschkeCoordinate> coords(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 0) {
            throw DomainConstraintError("coordinate degrees must be non-negative");
        }
        coords[i].theta = 2.0 * std::numbers::pi * uniform01(rng);
        for (int j = 0; j < degrees[i]; ++j) {
            const double r = 0.8 * std::sqrt(uniform01(rng));
            const double phi = 2.0 * std::numbers::pi * uniform01(rng);
            coords[i].zeros.push_back(std::polar(r, phi));
        }
    }
    return BlaschkeDisk(static_cast<int>(degrees.size()) - 1, std::move(coords));
}

struct Options {
    int k = 0;
    int n = 0;
    int n_max = 0;
    int precision = 4;
    int grid = 64;
    int samples = 4096;
    int degree = 1;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string format = "json";
    std::string point;
    std::string region = "upper";
    std::string dump_path;
    std::vector<int> degrees;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Options opt;
    CLI::App app{"Floer homology of the Clifford torus and real projective space"};
    app.name("floer");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads,
                   "Worker thread budget (results are identical for any value)")
        ->envname("FLOER_THREADS")
        ->check(CLI::PositiveNumber);

    auto* homology = app.add_subcommand("homology", "Homology dimension over GF(2)");
    homology->add_option("--k", opt.k, "Odd ambient dimension")->required();

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "Disk-bubbling parity and the d^2 identity");
    obstruction_cmd->add_option("--k", opt.k, "Ambient dimension (>= 2)")->required();

    auto* boundary_cmd = app.add_subcommand("boundary", "Boundary matrix over GF(2)");
    boundary_cmd->add_option("--k", opt.k, "Ambient dimension")->required();
    boundary_cmd->add_option("--dump-matrix", opt.dump_path,
                             "Write the matrix dump to this path");

    auto* recursion_cmd =
        app.add_subcommand("recursion", "Dimension recursion between consecutive odd k");
    recursion_cmd->add_option("--n", opt.n, "Downstairs index (k = 2n-1)")->required();

    auto* novikov_cmd =
        app.add_subcommand("novikov", "Homology dimension over the Novikov field");
    novikov_cmd->add_option("--k", opt.k, "Odd ambient dimension")->required();
    novikov_cmd->add_option("--precision", opt.precision, "Series window")
        ->capture_default_str();
    novikov_cmd->add_option("--dump-matrix", opt.dump_path,
                            "Write the deformed matrix as JSON triples");

    auto* disks_cmd = app.add_subcommand("disks", "Blaschke-product geometry");
    disks_cmd->require_subcommand(1);
    auto* strips_cmd =
        disks_cmd->add_subcommand("strips", "Isolated strips out of a point");
    strips_cmd->add_option("--k", opt.k, "Ambient dimension")->required();
    strips_cmd->add_option("--point", opt.point, "Base point (mask, 0b mask, or +/- string)")
        ->required();
    auto* winding_cmd =
        disks_cmd->add_subcommand("winding", "Maslov index of a random disk by winding");
    winding_cmd->add_option("--degrees", opt.degrees, "Per-coordinate Blaschke degrees")
        ->required()
        ->delimiter(',');
    winding_cmd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    winding_cmd->add_option("--samples", opt.samples, "Boundary samples")
        ->capture_default_str();
    auto* energy_cmd = disks_cmd->add_subcommand("energy", "Symplectic area by quadrature");
    energy_cmd->add_option("--k", opt.k, "Ambient dimension")->required();
    energy_cmd->add_option("--degree", opt.degree, "Degree of the first coordinate")
        ->capture_default_str();
    energy_cmd->add_option("--region", opt.region, "Integration region")
        ->check(CLI::IsMember({"upper", "full"}))
        ->capture_default_str();
    energy_cmd->add_option("--grid", opt.grid, "Quadrature grid")->capture_default_str();

    auto* volume_cmd = app.add_subcommand("volume", "Volume comparison table");
    volume_cmd->add_option("--n-max", opt.n_max, "Last row index")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("floer");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    // opt.threads is validated for interface stability; desk-scale runs are
    // single-threaded, which satisfies the determinism contract trivially.

    try {
        if (*homology) {
            const std::uint64_t hf = hf_dimension(opt.k);
            const std::size_t rk = rank(boundary_matrix(opt.k));
            emit_object(out, Json{{"k", opt.k}, {"rank", rk}, {"hf_dim", hf}}, opt.format);
        } else if (*obstruction_cmd) {
            const Obstruction o = obstruction(opt.k);
            emit_object(out,
                        Json{{"k", o.k},
                             {"phi_rp", o.phi_rp},
                             {"phi_t", o.phi_t},
                             {"phi_total", o.phi_rp + o.phi_t},
                             {"square_zero", o.square_is_zero}},
                        opt.format);
        } else if (*boundary_cmd) {
            const BitMatrix m = boundary_matrix(opt.k);
            Json j{{"k", opt.k}, {"rows", m.rows()}, {"cols", m.cols()}};
            if (!opt.dump_path.empty()) {
                std::ofstream file(opt.dump_path);
                if (!file) {
                    throw DomainConstraintError("cannot open " + opt.dump_path +
                                                " for writing");
                }
                dump_matrix(m, file);
                j["path"] = opt.dump_path;
            }
            emit_object(out, j, opt.format);
        } else if (*recursion_cmd) {
            const RecursionReport r = recursion_check(opt.n);
            emit_object(out,
                        Json{{"n", r.n},
                             {"N", r.big_n},
                             {"k_small", r.k_small},
                             {"k_big", r.k_big},
                             {"dim_ker_alpha", r.dim_ker_alpha},
                             {"half_dim_cf_big", r.half_dim_cf_big},
                             {"dim_hf_small", r.dim_hf_small},
                             {"dim_hf_big", r.dim_hf_big},
                             {"kernel_count_matches", r.kernel_count_matches},
                             {"dimension_doubles", r.dimension_doubles}},
                        opt.format);
        } else if (*novikov_cmd) {
            const std::uint64_t hf = hf_dimension_novikov(opt.k, opt.precision);
            const NovikovMatrix m = novikov_boundary_matrix(opt.k);
            const std::size_t rk = rank(m, opt.precision);
            Json j{{"k", opt.k},
                   {"precision", opt.precision},
                   {"rank", rk},
                   {"hf_dim", hf}};
            if (!opt.dump_path.empty()) {
                std::ofstream file(opt.dump_path);
                if (!file) {
                    throw DomainConstraintError("cannot open " + opt.dump_path +
                                                " for writing");
                }
                file << matrix_to_json(m) << '\n';
                j["path"] = opt.dump_path;
            }
            emit_object(out, j, opt.format);
        } else if (*strips_cmd) {
            const PointCode p = parse_point(opt.point, opt.k);
            const std::vector<BlaschkeDisk> strips = isolated_strips(p);
            Json list = Json::array();
            for (std::size_t i = 0; i < strips.size(); ++i) {
                const auto [from, to] = strip_endpoints(strips[i]);
                list.push_back(Json{{"index", i},
                                    {"from", from.mask},
                                    {"to", to.mask},
                                    {"from_signs", to_sign_string(from)},
                                    {"to_signs", to_sign_string(to)},
                                    {"maslov", strips[i].maslov_index()}});
            }
            if (opt.format == "csv") {
                std::vector<std::vector<Json>> rows;
                for (const auto& s : list) {
                    rows.push_back({Json(opt.k), Json(p.mask), s["index"], s["from"],
                                    s["to"], s["maslov"]});
                }
                emit_csv(out, {"k", "point", "index", "from", "to", "maslov"}, rows);
            } else {
                out << Json{{"k", opt.k}, {"point", p.mask}, {"strips", list}}.dump()
                    << '\n';
            }
        } else if (*winding_cmd) {
            const BlaschkeDisk d = random_disk(opt.degrees, opt.seed);
            const int maslov = winding_maslov(d, opt.samples);
            Json degrees = Json::array();
            for (int deg : opt.degrees) degrees.push_back(deg);
            if (opt.format == "csv") {
                std::string joined;
                for (std::size_t i = 0; i < opt.degrees.size(); ++i) {
                    joined += (i ? ";" : "") + std::to_string(opt.degrees[i]);
                }
                emit_csv(out, {"degrees", "seed", "samples", "maslov", "total_degree"},
                         {{Json(joined), Json(opt.seed), Json(opt.samples), Json(maslov),
                           Json(d.total_degree())}});
            } else {
                out << Json{{"degrees", degrees},
                            {"seed", opt.seed},
                            {"samples", opt.samples},
                            {"maslov", maslov},
                            {"total_degree", d.total_degree()}}
                           .dump()
                    << '\n';
            }
        } else if (*energy_cmd) {
            if (opt.degree < 1) {
                throw DomainConstraintError("energy disk degree must be >= 1");
            }
            std::vector<BlaschkeCoordinate> coords(opt.k + 1);
            coords[0].zeros.assign(opt.degree, Complex{0.0, 0.0});
            const BlaschkeDisk d(opt.k, std::move(coords));
            const EnergyRegion region = (opt.region == "full") ? EnergyRegion::FullDisk
                                                               : EnergyRegion::UpperHalf;
            const double value = energy(d, region, opt.grid);
            emit_object(out,
                        Json{{"k", opt.k},
                             {"degree", opt.degree},
                             {"region", opt.region},
                             {"grid", opt.grid},
                             {"energy", value}},
                        opt.format);
        } else if (*volume_cmd) {
            const std::vector<ComparisonRow> table = comparison_table(opt.n_max);
            if (opt.format == "csv") {
                std::vector<std::vector<Json>> rows;
                for (const auto& r : table) {
                    rows.push_back({Json(r.n), Json(r.ratio), Json(r.bound.value()),
                                    Json(r.bound_active)});
                }
                emit_csv(out, {"n", "ratio", "bound", "active"}, rows);
            } else {
                Json rows = Json::array();
                for (const auto& r : table) {
                    rows.push_back(Json{{"n", r.n},
                                        {"ratio", r.ratio},
                                        {"bound_num", r.bound.num},
                                        {"bound_den", r.bound.den},
                                        {"bound", r.bound.value()},
                                        {"active", r.bound_active}});
                }
                out << Json{{"n_max", opt.n_max}, {"rows", rows}}.dump() << '\n';
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace floer
