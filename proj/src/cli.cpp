#include "tridsign/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "tridsign/density.hpp"
#include "tridsign/embed.hpp"
#include "tridsign/error.hpp"
#include "tridsign/finite.hpp"
#include "tridsign/io.hpp"
#include "tridsign/sign_vector.hpp"
#include "tridsign/symbol.hpp"

namespace tridsign {

namespace {

namespace fs = std::filesystem;

struct Globals {
    double tol = 1e-10;
    unsigned threads = 0;
    std::size_t cap = 16;
};

class Emitter {
   public:
    Emitter(std::string command, std::string out, std::string format, std::ostream& stdout_)
        : out_(std::move(out)), format_(std::move(format)), stdout_(stdout_) {
        manifest_.command = std::move(command);
        if (format_.empty()) {
            const auto ext = fs::path(out_).extension().string();
            format_ = (ext == ".json" || ext == ".svg") ? ext.substr(1) : "csv";
        }
        if (format_ != "csv" && format_ != "json" && format_ != "svg")
            throw ArgumentError("unknown format '" + format_ + "' (expected csv, json or svg)");
    }

    const std::string& format() const { return format_; }
    Json& params() { return manifest_.params; }

    void emit(const std::string& content) {
        if (out_.empty()) {
            stdout_ << content;
            return;
        }
        write_file(out_, content);
        manifest_.record(out_, content);
    }

    void emit_cloud(const SpectrumCloud& cloud) {
        if (format_ == "csv")
            emit(cloud_to_csv(cloud));
        else if (format_ == "json")
            emit(cloud_to_json(cloud, manifest_.params));
        else
            emit(cloud_to_svg(cloud));
    }

    void finish(double seconds) {
        if (out_.empty()) return;
        manifest_.wall_seconds = seconds;
        write_file(out_ + ".manifest.json", manifest_.to_json().dump(1) + "\n");
    }

   private:
    std::string out_;
    std::string format_;
    std::ostream& stdout_;
    RunManifest manifest_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra of tridiagonal sign matrices and periodic sign operators"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "root-finder tolerance (normalized residual)")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--cap", g.cap, "largest n accepted by enumeration");

    // normalize
    auto* normalize = app.add_subcommand("normalize", "gauge-normalize (k, l) to super-diagonal ones");
    std::string nk, nl;
    bool periodic = false;
    normalize->add_option("--k", nk, "sub-diagonal signs, e.g. +-+")->required();
    normalize->add_option("--l", nl, "super-diagonal signs")->required();
    normalize->add_flag("--periodic", periodic, "treat (k, l) as one period of a periodic operator");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "spectrum of one finite matrix or periodic operator");
    std::string mode = "finite", sk, s_out, s_format;
    std::size_t samples = 256, max_m = 0;
    bool s_dedup = false;
    spectrum->add_option("--mode", mode, "finite or periodic")->check(CLI::IsMember({"finite", "periodic"}));
    spectrum->add_option("--k", sk, "sub-diagonal signs");
    spectrum->add_option("--samples", samples, "phi samples for periodic mode");
    spectrum->add_option("--max-m", max_m, "periodic mode without --k: union over all periods <= max-m");
    spectrum->add_option("--out", s_out, "output file (stdout if omitted)");
    spectrum->add_option("--format", s_format, "csv, json or svg (default from extension)");
    spectrum->add_flag("--dedup", s_dedup, "grid-snap duplicate points at 1e-6");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "eigenvalues of all sign matrices of one size");
    std::size_t en = 0;
    bool accumulate = false, e_dedup = false, canonical = false;
    std::string e_out, e_format;
    enumerate->add_option("--n", en, "number of sub-diagonal entries (matrix size n+1)")->required();
    enumerate->add_flag("--accumulate", accumulate, "union over all sizes 1..n");
    enumerate->add_flag("--dedup", e_dedup, "grid-snap duplicate points at 1e-6");
    enumerate->add_flag("--canonical", canonical, "solve one of each (k, reverse k) pair");
    enumerate->add_option("--out", e_out, "output file (stdout if omitted)");
    enumerate->add_option("--format", e_format, "csv, json or svg");

    // embed
    auto* embed = app.add_subcommand("embed", "build and verify the finite matrix carrying S^k_n");
    std::string bk, b_out;
    std::size_t bn = 0;
    double b_tol = 1e-8;
    bool witness = false;
    embed->add_option("--k", bk, "periodic sub-diagonal signs")->required();
    embed->add_option("--n", bn, "number of roots of unity (n >= 3)")->required();
    embed->add_option("--tol", b_tol, "verification tolerance on normalized residuals")->check(CLI::PositiveNumber);
    embed->add_flag("--witness", witness, "also compute eigenvectors with vanishing first entry");
    embed->add_option("--out", b_out, "JSON output file (stdout if omitted)");

    // density
    auto* density = app.add_subcommand("density", "directed Hausdorff distances to accumulated finite spectra");
    DensityParams dp;
    std::string d_out;
    density->add_option("--max-n", dp.max_n, "largest finite size n");
    density->add_option("--max-m", dp.max_m, "largest period");
    density->add_option("--samples", dp.samples, "phi samples per periodic operator");
    density->add_option("--disk-step", dp.disk_step, "unit-disk lattice step");
    density->add_option("--out", d_out, "JSON output file (stdout if omitted)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    RootOptions ro;
    ro.tol = g.tol;

    try {
        if (normalize->parsed()) {
            const SignVector k = parse_sign_vector(nk);
            const SignVector l = parse_sign_vector(nl);
            if (periodic) {
                const PeriodicOperatorSpec norm = gauge_normalize_periodic({k, l});
                out << norm.k.to_string() << "\n";
                if (norm.period() != k.size())
                    out << "period doubled: " << k.size() << " -> " << norm.period() << "\n";
            } else {
                out << gauge_normalize_finite(k, l).to_string() << "\n";
            }
            return kExitOk;
        }

        if (spectrum->parsed()) {
            Emitter em("spectrum", s_out, s_format, out);
            em.params() = {{"mode", mode}, {"tol", g.tol}};
            SpectrumCloud cloud;
            if (mode == "finite") {
                if (sk.empty()) throw ArgumentError("finite mode needs --k");
                const SignVector k = parse_sign_vector(sk);
                em.params()["k"] = sk;
                cloud = finite_eigenvalues(k, ro);
            } else {
                if (samples < 2) throw ArgumentError("--samples must be >= 2");
                em.params()["samples"] = samples;
                if (!sk.empty()) {
                    em.params()["k"] = sk;
                    cloud = periodic_spectrum(parse_sign_vector(sk), samples, ro);
                } else if (max_m > 0) {
                    em.params()["max_m"] = max_m;
                    cloud = periodic_union(max_m, samples, ro, g.threads);
                } else {
                    throw ArgumentError("periodic mode needs --k or --max-m");
                }
            }
            cloud.sort();
            if (s_dedup) cloud = grid_snap_dedup(cloud);
            em.emit_cloud(cloud);
            const double secs = seconds_since(t0);
            em.finish(secs);
            err << "points: " << cloud.size() << "\n";
            return kExitOk;
        }

        if (enumerate->parsed()) {
            Emitter em("enumerate", e_out, e_format, out);
            em.params() = {{"n", en}, {"accumulate", accumulate}, {"dedup", e_dedup}, {"tol", g.tol}};
            EnumerateOptions eo;
            eo.roots = ro;
            eo.cap = g.cap;
            eo.threads = g.threads;
            eo.canonical_reversal = canonical;
            SpectrumCloud cloud = accumulate ? enumerate_sigma_accumulated(en, eo) : enumerate_sigma(en, eo);
            if (e_dedup) cloud = grid_snap_dedup(cloud);
            const double compute = seconds_since(t0);
            em.emit_cloud(cloud);
            em.finish(seconds_since(t0));
            char buf[96];
            std::snprintf(buf, sizeof(buf), "points: %zu\nseconds: %.3f\n", cloud.size(), compute);
            err << buf;
            return kExitOk;
        }

        if (embed->parsed()) {
            if (bn < 3) throw ArgumentError("embed needs --n >= 3");
            Emitter em("embed", b_out, "json", out);
            em.params() = {{"k", bk}, {"n", bn}, {"tol", b_tol}, {"witness", witness}};
            EmbedOptions eo;
            eo.tol = b_tol;
            eo.want_witness = witness;
            eo.roots = ro;
            const EmbeddingResult r = verify_embedding(parse_sign_vector(bk), bn, eo);
            em.emit(embedding_to_json(r).dump(1) + "\n");
            em.finish(seconds_since(t0));
            err << (r.verified ? "verified" : "NOT verified") << ": l=" << r.l.to_string()
                << " worst residual " << r.worst_residual << "\n";
            return r.verified ? kExitOk : kExitVerificationFailed;
        }

        if (density->parsed()) {
            dp.cap = g.cap;
            dp.threads = g.threads;
            dp.roots = ro;
            Emitter em("density", d_out, "json", out);
            const DensityReport r = density_report(dp);
            em.params() = density_to_json(r)["params"];
            em.emit(density_to_json(r).dump(1) + "\n");
            em.finish(seconds_since(t0));
            err << "monotone: " << (r.monotone ? "yes" : "no") << "\n";
            return r.monotone ? kExitOk : kExitVerificationFailed;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RefusalError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const WitnessDegenerateError& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const Error& e) {
        // ConvergenceError, NumericalConsistencyError
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace tridsign
