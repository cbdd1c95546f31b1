// Command line front end: instance generation, game execution, adversary
// runs, curve building, verification and SVG/table output.
#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "stripcolor/adversary.hpp"
#include "stripcolor/caps.hpp"
#include "stripcolor/curves.hpp"
#include "stripcolor/engine.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/generators.hpp"
#include "stripcolor/instance_io.hpp"
#include "stripcolor/oracle.hpp"
#include "stripcolor/strip_coloring.hpp"
#include "stripcolor/svg.hpp"

namespace sc = stripcolor;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

sc::Instance generate_instance(const std::string& kind, int n, std::uint64_t seed, int omega_cap) {
    sc::GenOptions opt{n, seed, omega_cap};
    sc::Instance inst;
    if (kind == "segments") {
        inst.kind = sc::InstanceKind::strip;
        inst.strip_objects = sc::gen_segments(opt);
    } else if (kind == "convex") {
        inst.kind = sc::InstanceKind::strip;
        inst.strip_objects = sc::gen_convex(opt);
    } else if (kind == "quasi_convex") {
        inst.kind = sc::InstanceKind::strip;
        inst.strip_objects = sc::gen_quasi_convex(opt);
    } else if (kind == "attached") {
        inst.kind = sc::InstanceKind::attached;
        inst.attached = sc::gen_attached(opt);
    } else {
        throw sc::InvalidInputError("unknown kind: " + kind);
    }
    return inst;
}

bool strip_intersects(const sc::StripObject& a, const sc::StripObject& b) {
    return sc::intersects(a, b);
}

struct RunOutput {
    sc::Transcript<sc::StripObject> transcript;
    sc::ReportRow row;
    bool verified = true;
};

RunOutput run_strip_instance(const std::vector<sc::StripObject>& objects,
                             const std::string& algorithm, std::uint64_t seed, bool full_verify) {
    RunOutput out;
    if (algorithm == "stripcolor") {
        sc::StripColorer colorer;
        out.transcript = sc::play<sc::StripObject>(objects, colorer, strip_intersects);
    } else if (algorithm == "firstfit") {
        sc::FirstFitColorer<sc::StripObject> colorer(strip_intersects);
        out.transcript = sc::play<sc::StripObject>(objects, colorer, strip_intersects);
    } else {
        throw sc::InvalidInputError("unknown algorithm: " + algorithm);
    }
    const auto& t = out.transcript;
    out.row.seed = seed;
    out.row.algorithm = algorithm;
    out.row.n = static_cast<int>(t.objects.size());
    out.row.omega = t.omega_running.empty() ? 0 : t.omega_running.back();
    out.row.colors_used = t.colors_used();
    out.row.proper = t.proper;
    out.verified = t.proper;
    if (algorithm == "stripcolor") {
        out.row.bound = sc::triple_color_bound(out.row.omega);
        int gmax = 0;
        for (const sc::Color& c : t.colors) gmax = std::max(gmax, c.c);
        out.row.gamma_max = t.colors.empty() ? 0 : gmax;
        if (full_verify) {
            sc::TripleRunChecks checks = sc::check_triple_run(t, t.objects.size() <= 25);
            out.verified = checks.all();
        }
    }
    return out;
}

int cmd_generate(const std::string& kind, int n, std::uint64_t seed, int omega_cap,
                 const std::string& out_path) {
    sc::Instance inst = generate_instance(kind, n, seed, omega_cap);
    std::string text = sc::serialize_instance(inst);
    if (out_path.empty())
        std::cout << text;
    else
        sc::write_file(out_path, text);
    return 0;
}

int cmd_run(const std::string& instance_path, const std::string& kind, int n, int omega_cap,
            const std::string& algorithm, std::uint64_t seed, int batch,
            const std::string& verify_mode, const std::string& report_path,
            const std::string& transcript_path, const std::string& svg_path, int threads) {
    const bool full = verify_mode == "full";
    std::vector<sc::ReportRow> rows(static_cast<std::size_t>(batch));
    std::vector<char> ok(static_cast<std::size_t>(batch), 1);
    std::string transcript_text;
    std::string svg_text;

    if (!instance_path.empty() && batch != 1)
        throw sc::InvalidInputError("--batch needs generated instances, not --instance");

    std::atomic<int> next{0};
    std::mutex io_mutex;
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= batch) return;
            std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            std::vector<sc::StripObject> objects;
            if (!instance_path.empty()) {
                sc::Instance inst = sc::parse_instance(sc::read_file(instance_path));
                if (inst.kind != sc::InstanceKind::strip)
                    throw sc::InvalidInputError("run expects a strip instance");
                objects = inst.strip_objects;
            } else {
                objects = generate_instance(kind, n, s, omega_cap).strip_objects;
            }
            RunOutput r = run_strip_instance(objects, algorithm, s, full);
            rows[i] = r.row;
            ok[i] = r.verified ? 1 : 0;
            if (i == 0) {
                std::lock_guard<std::mutex> lock(io_mutex);
                transcript_text = sc::serialize_transcript(r.transcript, algorithm);
                svg_text = sc::svg_strip_family(r.transcript.objects, r.transcript.colors);
            }
        }
    };
    int nthreads = std::max(1, std::min(batch, threads));
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::string report = sc::report_header();
    bool all_ok = true;
    for (int i = 0; i < batch; ++i) {
        report += sc::report_line(rows[i]);
        if (!ok[i]) all_ok = false;
    }
    if (report_path.empty())
        std::cout << report;
    else
        sc::write_file(report_path, report);
    if (!transcript_path.empty()) sc::write_file(transcript_path, transcript_text);
    if (!svg_path.empty()) sc::write_file(svg_path, svg_text);
    return all_ok ? 0 : kExitVerifyFailure;
}

int cmd_adversary(int k, const std::string& algorithm, std::uint64_t seed,
                  const std::string& report_path, const std::string& svg_path,
                  const std::string& out_path) {
    auto attached_intersects = [](const sc::AttachedSegment& a, const sc::AttachedSegment& b) {
        return sc::intersects_attached(a, b);
    };
    std::unique_ptr<sc::OnlineColorer<sc::AttachedSegment>> colorer;
    if (algorithm == "firstfit")
        colorer = std::make_unique<sc::FirstFitColorer<sc::AttachedSegment>>(attached_intersects);
    else if (algorithm == "leastused")
        colorer = std::make_unique<sc::LeastUsedColorer<sc::AttachedSegment>>(attached_intersects);
    else if (algorithm == "random")
        colorer = std::make_unique<sc::RandomProperColorer<sc::AttachedSegment>>(attached_intersects,
                                                                                 seed);
    else if (algorithm == "stripcolor")
        colorer = std::make_unique<sc::AttachedTripleColorer>();
    else
        throw sc::InvalidInputError("unknown algorithm: " + algorithm);

    sc::Region region{sc::Rational(0), sc::Rational(1), sc::Rational(1)};
    sc::AdversaryOutcome outcome = sc::run_adversary(k, *colorer, region);

    bool ok = static_cast<int>(outcome.family.size()) == (1 << k) - 1 &&
              static_cast<int>(outcome.colors_on_pierced.size()) >= k &&
              sc::clique_at_most_two(outcome.family);

    sc::ReportRow row;
    row.seed = seed;
    row.algorithm = algorithm;
    row.n = static_cast<int>(outcome.family.size());
    row.omega = sc::oracle::clique_number(outcome.transcript.graph, outcome.transcript.graph.size());
    row.colors_used = outcome.transcript.colors_used();
    row.proper = outcome.transcript.proper;
    std::string report = sc::report_header() + sc::report_line(row);
    if (report_path.empty())
        std::cout << report;
    else
        sc::write_file(report_path, report);
    if (!svg_path.empty()) sc::write_file(svg_path, sc::svg_adversary(outcome));
    if (!out_path.empty()) {
        sc::Instance inst;
        inst.kind = sc::InstanceKind::attached;
        inst.attached = outcome.family;
        sc::write_file(out_path, sc::serialize_instance(inst));
    }
    std::cout << "adversary k=" << k << " algorithm=" << algorithm << " segments="
              << outcome.family.size() << " pierced=" << outcome.pierced.size()
              << " colors_on_pierced=" << outcome.colors_on_pierced.size()
              << " witness_x=" << outcome.witness.x.str() << " ok=" << (ok ? 1 : 0) << "\n";
    return ok ? 0 : kExitVerifyFailure;
}

int cmd_curves(const std::string& poset_path, const std::string& order_csv,
               std::uint64_t order_seed, const std::string& verify_mode,
               const std::string& svg_path) {
    sc::Poset target = sc::parse_poset(sc::read_file(poset_path));
    const int n = target.size();
    std::vector<int> order;
    if (!order_csv.empty()) {
        std::istringstream in(order_csv);
        std::string tok;
        while (std::getline(in, tok, ',')) order.push_back(std::stoi(tok));
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int e : order) {
            if (e < 0 || e >= n || seen[e])
                throw sc::InvalidInputError("insertion order must list every element once");
            seen[e] = true;
        }
        if (static_cast<int>(order.size()) != n)
            throw sc::InvalidInputError("insertion order must list every element once");
    } else {
        order.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[i] = i;
        if (order_seed != 0) {
            sc::Rng rng(order_seed);
            for (int i = n - 1; i > 0; --i)
                std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);
        }
    }

    sc::CurveSystem sys;
    std::vector<int> inserted;  // global element of each local index
    bool ok = true;
    for (int step = 0; step < n; ++step) {
        int e = order[step];
        std::vector<int> up, down;
        for (std::size_t j = 0; j < inserted.size(); ++j) {
            if (target.less(e, inserted[j])) up.push_back(static_cast<int>(j));
            if (target.less(inserted[j], e)) down.push_back(static_cast<int>(j));
        }
        sys = sc::insert_element(sys, up, down);
        inserted.push_back(e);
        if (!sc::verify_representation(sys)) ok = false;
        if (verify_mode == "full" && sys.poset.size() <= sc::caps().extensions &&
            !sc::verify_star(sys))
            ok = false;
    }
    if (!svg_path.empty()) sc::write_file(svg_path, sc::svg_curve_system(sys, true));
    std::size_t bends = 0;
    for (const auto& c : sys.curves) bends = std::max(bends, c.pts.size());
    std::cout << "curves n=" << n << " lines=" << sys.lines.size()
              << " max_vertices=" << bends << " verified=" << (ok ? 1 : 0) << "\n";
    return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"on-line coloring of objects spanned between two lines"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a random instance file");
    std::string gen_kind = "segments";
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    int gen_cap = 0;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "segments|convex|quasi_convex|attached");
    gen->add_option("--n", gen_n, "number of objects");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--omega-cap", gen_cap, "reject instances with larger clique number");
    gen->add_option("--out,-o", gen_out, "output path (default stdout)");

    // run
    auto* run = app.add_subcommand("run", "play an on-line game and report");
    std::string run_instance, run_kind = "quasi_convex", run_algorithm = "stripcolor";
    std::string run_verify = "fast", run_report, run_transcript, run_svg;
    int run_n = 20, run_cap = 0, run_batch = 1;
    std::uint64_t run_seed = 1;
    int run_threads = static_cast<int>(std::thread::hardware_concurrency());
    run->add_option("--instance", run_instance, "instance file (otherwise generated)");
    run->add_option("--kind", run_kind, "generated kind: segments|convex|quasi_convex");
    run->add_option("--n", run_n, "generated size");
    run->add_option("--omega-cap", run_cap, "generated clique cap");
    run->add_option("--algorithm", run_algorithm, "stripcolor|firstfit");
    run->add_option("--seed", run_seed, "base seed");
    run->add_option("--batch", run_batch, "number of seeded runs");
    run->add_option("--verify", run_verify, "fast|full");
    run->add_option("--report", run_report, "report TSV path (default stdout)");
    run->add_option("--transcript", run_transcript, "transcript path for the first run");
    run->add_option("--svg", run_svg, "SVG path for the first run");
    run->add_option("--threads", run_threads, "worker threads for batches");

    // adversary
    auto* adv = app.add_subcommand("adversary", "run the attached-segment adversary");
    int adv_k = 3;
    std::string adv_algorithm = "firstfit", adv_report, adv_svg, adv_out;
    std::uint64_t adv_seed = 1;
    adv->add_option("--k", adv_k, "colors to force");
    adv->add_option("--algorithm", adv_algorithm, "firstfit|leastused|random|stripcolor");
    adv->add_option("--seed", adv_seed, "seed for the random algorithm");
    adv->add_option("--report", adv_report, "report TSV path (default stdout)");
    adv->add_option("--svg", adv_svg, "SVG path");
    adv->add_option("--out", adv_out, "save the produced family as an instance file");

    // curves
    auto* cur = app.add_subcommand("curves", "build an on-line curve representation");
    std::string cur_poset, cur_order, cur_verify = "full", cur_svg;
    std::uint64_t cur_order_seed = 0;
    cur->add_option("--poset", cur_poset, "poset file")->required();
    cur->add_option("--order", cur_order, "comma separated insertion order");
    cur->add_option("--order-seed", cur_order_seed, "shuffle the insertion order");
    cur->add_option("--verify", cur_verify, "fast|full");
    cur->add_option("--svg", cur_svg, "SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_kind, gen_n, gen_seed, gen_cap, gen_out);
        if (run->parsed())
            return cmd_run(run_instance, run_kind, run_n, run_cap, run_algorithm, run_seed,
                           run_batch, run_verify, run_report, run_transcript, run_svg, run_threads);
        if (adv->parsed())
            return cmd_adversary(adv_k, adv_algorithm, adv_seed, adv_report, adv_svg, adv_out);
        if (cur->parsed())
            return cmd_curves(cur_poset, cur_order, cur_order_seed, cur_verify, cur_svg);
    } catch (const sc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
