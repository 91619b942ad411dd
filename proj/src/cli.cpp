/**
 * @file cli.cpp
 * @brief Subcommand implementations for the charnum tool.
 *
 * compute  — build the full potential family for a target at a cap and cache
 *            every member (canonical JSON, atomic writes, manifest digests).
 * query    — print one enumerative number with stratum metadata.  Served
 *            from the cache when a file with a sufficient cap exists; with a
 *            cold cache the needed potentials are built on the fly.
 * table    — print every stored number of one (kind, class) slice.
 * verify   — cache integrity + consistency checks, then the exact identity
 *            suite; nonzero exit on any hard failure.
 *
 * Numbers print as integers when the denominator is 1 and as "num/den"
 * otherwise; never as decimals.
 */
#include "charnum/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "charnum/cache.hpp"
#include "charnum/flex.hpp"
#include "charnum/targets.hpp"
#include "charnum/verify.hpp"

namespace charnum {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

int parse_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        fail(std::string("invalid ") + what + ": '" + s + "'");
    }
    if (pos != s.size()) fail(std::string("invalid ") + what + ": '" + s + "'");
    return v;
}

CurveClass parse_class(Target target, const std::string& text) {
    const auto comma = text.find(',');
    if (target == Target::Plane) {
        if (comma != std::string::npos)
            fail("plane classes are a single degree, e.g. --class 3");
        const int d = parse_int(text, "class");
        if (d < 1) fail("class degree must be >= 1");
        return plane_class(d);
    }
    if (comma == std::string::npos)
        fail("quadric classes are a bi-degree pair, e.g. --class 2,1");
    const int m = parse_int(text.substr(0, comma), "class");
    const int n = parse_int(text.substr(comma + 1), "class");
    if (m < 0 || n < 0 || m + n < 1)
        fail("quadric bi-degrees must be nonnegative with m+n >= 1");
    return quadric_class(m, n);
}

Kind parse_kind(Target target, const std::string& name) {
    Kind k = Kind::Scratch;
    try {
        k = kind_from_name(name);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    if (k == Kind::Scratch || !kind_valid_for(k, target))
        fail("kind " + name + " is not defined on target " + target_name(target));
    return k;
}

int cell_count(const Potential& p) {
    int n = 0;
    for (const auto& [cls, slice] : p.slices) n += static_cast<int>(slice.size());
    return n;
}

/// Every potential the bundle holds, with the flex degree used in its cache
/// file name (0 everywhere except the plane triple-contact family).
std::vector<std::pair<const Potential*, int>> bundle_files(const PotentialBundle& b) {
    std::vector<std::pair<const Potential*, int>> out = {
        {&b.G, 0},           {&b.enriched.p0, 0}, {&b.enriched.p1, 0}, {&b.enriched.p2, 0},
        {&b.enriched.q0, 0}, {&b.enriched.q1, 0}, {&b.enriched.q2, 0}, {&b.cusp.kp, 0},
        {&b.cusp.kl, 0},     {&b.cusp.k, 0},
    };
    if (b.target == Target::Quadric) {
        out.push_back({&b.H, 0});
        out.push_back({&b.I, 0});
        out.push_back({&b.J, 0});
        out.push_back({&b.irr.kp_irr, 0});
        out.push_back({&b.irr.kl_irr, 0});
        out.push_back({&b.F, 0});
    } else {
        out.push_back({&b.F1, 1});
        out.push_back({&b.F2, 2});
        out.push_back({&b.F3, 3});
    }
    return out;
}

struct StoredFile {
    std::string file;
    Kind kind;
    int cells;
};

std::vector<StoredFile> store_bundle(const std::filesystem::path& dir, const PotentialBundle& b) {
    std::vector<StoredFile> out;
    for (const auto& [p, z] : bundle_files(b)) {
        store_potential(dir, *p, z);
        out.push_back({cache_file_name(p->target, p->kind, p->cap, z), p->kind, cell_count(*p)});
    }
    return out;
}

const Potential& member(const PotentialBundle& b, Kind kind, int z) {
    switch (kind) {
        case Kind::G: return b.G;
        case Kind::P0: return b.enriched.p0;
        case Kind::P1:
        case Kind::P12: return b.enriched.p1;
        case Kind::P2:
        case Kind::P3: return b.enriched.p2;
        case Kind::Q0: return b.enriched.q0;
        case Kind::Q1:
        case Kind::Q12: return b.enriched.q1;
        case Kind::Q2:
        case Kind::Q3: return b.enriched.q2;
        case Kind::K: return b.cusp.k;
        case Kind::KL: return b.cusp.kl;
        case Kind::KP: return b.cusp.kp;
        case Kind::H: return b.H;
        case Kind::I: return b.I;
        case Kind::J: return b.J;
        case Kind::KLirr: return b.irr.kl_irr;
        case Kind::KPirr: return b.irr.kp_irr;
        case Kind::F:
            if (b.target == Target::Quadric) return b.F;
            if (z == 1) return b.F1;
            if (z == 2) return b.F2;
            return b.F3;
        default: break;
    }
    throw std::logic_error("no bundle member for kind " + kind_name(kind));
}

/// Exact-cap fetch: cache hit, or a full build whose members are all cached.
Potential obtain(const std::filesystem::path& dir, Target target, Kind kind, int cap, int z) {
    if (auto cached = load_potential(dir, target, kind, cap, z)) return *cached;
    const PotentialBundle b = build_bundle(target, cap);
    store_bundle(dir, b);
    if (target == Target::Plane && kind == Kind::F && z > 3) {
        // The bundle carries z = 1..3; larger fixed-curve degrees are built
        // directly (the construction is uniform in z).
        Potential f = flex_plane(b.G, b.enriched, z);
        store_potential(dir, f, z);
        return f;
    }
    return member(b, kind, z);
}

/// Serve a query needing class total `needed`:
///  - any cached file of this kind with cap >= needed wins;
///  - otherwise an explicit --cap (>= needed) triggers a build at that cap;
///  - otherwise a smaller cached cap is a hard "increase cap" error (the
///    cache owner chose that cap; growing it silently would surprise);
///  - a cold cache builds at exactly `needed`.
Potential resolve(const std::filesystem::path& dir, Target target, Kind kind, int needed,
                  std::optional<int> cap_flag, int z) {
    if (cap_flag && *cap_flag < needed)
        fail("class total degree " + std::to_string(needed) + " beyond requested cap " +
             std::to_string(*cap_flag) + "; increase --cap");
    const auto best = best_cached_cap(dir, target, kind, z);
    if (best && *best >= needed) {
        if (auto cached = load_potential(dir, target, kind, *best, z)) return *cached;
    }
    if (cap_flag) return obtain(dir, target, kind, *cap_flag, z);
    if (best)
        fail("class total degree " + std::to_string(needed) + " beyond cached cap " +
             std::to_string(*best) + " (not computed; increase cap — rerun compute with --cap >= " +
             std::to_string(needed) + ")");
    return obtain(dir, target, kind, needed, z);
}

int flex_degree_for(Target target, Kind kind, int z) {
    return (target == Target::Plane && kind == Kind::F) ? z : 0;
}

int cmd_compute(Target target, int cap, const std::vector<std::string>& kind_names,
                const std::filesystem::path& dir) {
    for (const std::string& name : kind_names) parse_kind(target, name);  // typo check
    const auto t0 = std::chrono::steady_clock::now();
    const PotentialBundle b = build_bundle(target, cap);
    const std::vector<StoredFile> stored = store_bundle(dir, b);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cout << "built " << target_name(target) << " potentials at cap " << cap << " ("
              << std::fixed << std::setprecision(2) << dt.count() << " s)\n";
    for (const StoredFile& f : stored)
        std::cout << "  " << std::left << std::setw(6) << kind_name(f.kind) << std::right
                  << std::setw(6) << f.cells << " cells  " << f.file << "\n";
    return 0;
}

int cmd_query(const QuerySpec& q, const std::filesystem::path& dir, std::optional<int> cap_flag) {
    const Potential p =
        resolve(dir, q.target, q.kind, q.cls.total(), cap_flag, flex_degree_for(q.target, q.kind, q.z));
    std::cout << to_display_string(coefficient(p, q.cls, q.cell)) << "\n";

    const int want = expected_conditions(q.kind, q.cls);
    const int have = q.cell.condition_total();
    if (want < 0)
        std::cout << "# note: " << kind_name(q.kind) << " has no admissible conditions at class "
                  << class_name(q.cls) << "; this slice is identically zero\n";
    else if (have == want)
        std::cout << "# stratum: a+b+2c = " << want << " for " << kind_name(q.kind) << " at class "
                  << class_name(q.cls) << " (query matches)\n";
    else
        std::cout << "# off-stratum: " << kind_name(q.kind) << " at class " << class_name(q.cls)
                  << " carries nonzero values only on a+b+2c = " << want << "; the query has "
                  << have << ", so the count is 0 by convention\n";

    if (q.kind == Kind::H && (q.cell.a != 0 || q.cell.c != 0))
        std::cout << "# note: H uses only the v direction (cells (0, 2d-2, 0))\n";
    if (q.kind == Kind::H)
        std::cout << "# note: branched-cover counts are stack counts; fractional values are "
                     "possible\n";
    if (q.target == Target::Plane && q.cls.total() == 2 &&
        (q.kind == Kind::K || q.kind == Kind::KL || q.kind == Kind::KP))
        std::cout << "# note: degree-2 cells are stack counts of marked double covers, not "
                     "cuspidal-conic counts; fractional values are possible\n";
    if (q.target == Target::Plane && q.kind == Kind::F)
        std::cout << "# stratum note: F sits on a+b+2c = 3d-3 (moduli dimension 3d-1 minus "
                     "codimension 2 for third-order contact); the 2d-3 convention seen "
                     "elsewhere does not match the computed support\n";
    if (q.target == Target::Plane && q.kind == Kind::F && q.cls.total() == 1)
        std::cout << "# note: the degree-1 slice of F is excluded (a line tangent to the fixed "
                     "curve at an inflection point has automatic third-order contact); "
                     "reported as 0\n";
    return 0;
}

int cmd_table(Target target, Kind kind, CurveClass cls, int z, const std::string& format,
              const std::filesystem::path& dir, std::optional<int> cap_flag) {
    const Potential p =
        resolve(dir, target, kind, cls.total(), cap_flag, flex_degree_for(target, kind, z));
    std::vector<std::tuple<int, int, int, std::string>> rows;
    if (auto it = p.slices.find(cls); it != p.slices.end())
        for (const auto& [e, g] : it->second) {
            (void)g;
            rows.emplace_back(e.a, e.b, e.c, to_display_string(coefficient(p, cls, e)));
        }

    if (format == "csv") {
        std::cout << "a,b,c,value\n";
        for (const auto& [a, b, c, v] : rows)
            std::cout << a << ',' << b << ',' << c << ',' << v << "\n";
    } else if (format == "json") {
        std::ostringstream out;
        out << "{\"target\":\"" << target_name(target) << "\",\"kind\":\"" << kind_name(kind)
            << "\"";
        if (target == Target::Plane && kind == Kind::F) out << ",\"z\":" << z;
        out << ",\"class\":[" << cls.m;
        if (target == Target::Quadric) out << ',' << cls.n;
        out << "],\"rows\":[";
        bool first = true;
        for (const auto& [a, b, c, v] : rows) {
            if (!first) out << ',';
            first = false;
            out << "{\"a\":" << a << ",\"b\":" << b << ",\"c\":" << c << ",\"value\":\"" << v
                << "\"}";
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << " a  b  c  value\n";
        for (const auto& [a, b, c, v] : rows)
            std::cout << std::setw(2) << a << ' ' << std::setw(2) << b << ' ' << std::setw(2) << c
                      << "  " << v << "\n";
    }
    return 0;
}

int cmd_verify(Target target, int cap, const std::filesystem::path& dir) {
    int passes = 0, hard_failures = 0, warnings = 0;

    // Cache integrity: every cached file for this target must load, pass its
    // digest, and sit on its admissibility stratum.
    const CacheManifest manifest = load_manifest(dir);
    int checked = 0;
    bool cache_ok = true;
    for (const CacheEntry& e : manifest.entries) {
        if (e.target != target_name(target)) continue;
        ++checked;
        try {
            const Kind k = kind_from_name(e.kind);
            const auto p = load_potential(dir, target, k, e.cap, e.z);
            if (!p) throw std::runtime_error("manifest row vanished during the check");
            assert_on_stratum(*p);
        } catch (const std::exception& ex) {
            std::cout << "[FAIL] cache-integrity: " << e.file << ": " << ex.what() << "\n";
            cache_ok = false;
            ++hard_failures;
        }
    }
    if (cache_ok) {
        std::cout << "[PASS] cache-integrity (" << checked << " cached files)\n";
        ++passes;
    }

    const PotentialBundle b = build_bundle(target, cap);

    // Cache consistency: cached files at this cap must equal a fresh rebuild
    // byte for byte (the serialization is canonical).
    {
        bool consistent = true;
        int compared = 0;
        for (const auto& [p, z] : bundle_files(b)) {
            const std::string file = cache_file_name(target, p->kind, cap, z);
            for (const CacheEntry& e : manifest.entries) {
                if (e.file != file) continue;
                ++compared;
                std::ifstream in(dir / file, std::ios::binary);
                std::ostringstream buf;
                buf << in.rdbuf();
                if (buf.str() != serialize(*p)) {
                    std::cout << "[FAIL] cache-consistency: " << file
                              << " differs from a fresh rebuild\n";
                    consistent = false;
                    ++hard_failures;
                }
            }
        }
        if (consistent) {
            std::cout << "[PASS] cache-consistency (" << compared
                      << " files compared against the rebuild)\n";
            ++passes;
        }
    }

    for (const CheckResult& r : run_verify(b)) {
        if (r.passed) {
            std::cout << "[PASS] " << r.name << "\n";
            ++passes;
        } else if (r.hard) {
            std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
            ++hard_failures;
        } else {
            std::cout << "[WARN] " << r.name << ": " << r.detail << "\n";
            ++warnings;
        }
    }
    std::cout << "verify: " << passes << " passed, " << hard_failures << " failed, " << warnings
              << " warnings\n";
    return hard_failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"characteristic numbers of rational curves on the plane and the quadric surface"};
    app.require_subcommand(1);

    std::string target_s = "p2", class_s, kind_s, format = "table";
    std::string cache_dir = "./.charnum-cache";
    std::vector<std::string> kinds;
    int cap = 0, a = 0, b = 0, c = 0, z = 1;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--target", target_s, "target space")->check(CLI::IsMember({"p2", "p1xp1"}));
        sub->add_option("--cache-dir", cache_dir, "cache directory")
            ->capture_default_str();
    };

    CLI::App* c_compute = app.add_subcommand("compute", "build potentials up to a cap and cache them");
    add_common(c_compute);
    c_compute->add_option("--cap", cap, "maximum class total degree")
        ->required()
        ->check(CLI::PositiveNumber);
    c_compute->add_option("--kinds", kinds, "potential kinds to report (default: all)")
        ->delimiter(',');

    CLI::App* c_query = app.add_subcommand("query", "print one enumerative number");
    add_common(c_query);
    c_query->add_option("--kind", kind_s, "potential kind")->required();
    c_query->add_option("--class", class_s, "curve class: d (plane) or m,n (quadric)")->required();
    c_query->add_option("--a", a, "point conditions");
    c_query->add_option("--b", b, "tangency conditions");
    c_query->add_option("--c", c, "flag conditions (tangency at a marked point)");
    c_query->add_option("--z", z, "degree of the fixed contact curve (plane F only)");
    CLI::Option* q_cap = c_query->add_option("--cap", cap, "build cap for a cache miss")
                             ->check(CLI::PositiveNumber);

    CLI::App* c_table = app.add_subcommand("table", "print every number of one (kind, class) slice");
    add_common(c_table);
    c_table->add_option("--kind", kind_s, "potential kind")->required();
    c_table->add_option("--class", class_s, "curve class: d (plane) or m,n (quadric)")->required();
    c_table->add_option("--z", z, "degree of the fixed contact curve (plane F only)");
    c_table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    CLI::Option* t_cap = c_table->add_option("--cap", cap, "build cap for a cache miss")
                             ->check(CLI::PositiveNumber);

    CLI::App* c_verify = app.add_subcommand("verify", "run the exact identity suite");
    add_common(c_verify);
    c_verify->add_option("--cap", cap, "cap for the verification build")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const Target target = target_from_name(target_s);
        const std::filesystem::path dir = cache_dir;
        if (c_compute->parsed()) return cmd_compute(target, cap, kinds, dir);
        if (c_query->parsed()) {
            const Kind kind = parse_kind(target, kind_s);
            const CurveClass cls = parse_class(target, class_s);
            if (a < 0 || b < 0 || c < 0) fail("condition counts must be nonnegative");
            if (target == Target::Plane && kind == Kind::F && z < 1) fail("--z must be >= 1");
            std::optional<int> cap_flag;
            if (q_cap->count() > 0) cap_flag = cap;
            return cmd_query(QuerySpec{target, kind, cls, ExponentTuple{a, b, c}, z}, dir, cap_flag);
        }
        if (c_table->parsed()) {
            const Kind kind = parse_kind(target, kind_s);
            const CurveClass cls = parse_class(target, class_s);
            if (target == Target::Plane && kind == Kind::F && z < 1) fail("--z must be >= 1");
            std::optional<int> cap_flag;
            if (t_cap->count() > 0) cap_flag = cap;
            return cmd_table(target, kind, cls, z, format, dir, cap_flag);
        }
        if (c_verify->parsed()) return cmd_verify(target, cap, dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace charnum
