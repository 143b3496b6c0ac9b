#include "cli.hpp"

#include "tate/mapgen.hpp"
#include "tate/weights.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace tate::cli {

namespace {

using ext::Morphism;
using la::PrimeField;
using maps::MapKind;

int parse_int(const std::string& text)
{
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw UsageError("not an integer: '" + text + "'");
    return value;
}

std::vector<Entry> to_entries(const std::vector<res::TermEntry>& in)
{
    std::vector<Entry> out;
    for (const auto& e : in)
        out.push_back({e.omega_twist, e.rank});
    return out;
}

// Merge equal twists and sort, so predicted and computed compare as multisets.
std::vector<Entry> normalized(std::vector<Entry> in)
{
    std::sort(in.begin(), in.end(), [](const Entry& x, const Entry& y) { return x.omega_twist < y.omega_twist; });
    std::vector<Entry> out;
    for (const auto& e : in) {
        if (e.rank == 0)
            continue;
        if (!out.empty() && out.back().omega_twist == e.omega_twist)
            out.back().rank += e.rank;
        else
            out.push_back(e);
    }
    return out;
}

std::vector<Entry> predicted_entries(MapKind kind, const std::string& predictor, int dim_a, int dim_b, int p)
{
    std::vector<Entry> out;
    if (predictor == "cohomology") {
        std::vector<wt::TermPrediction> terms;
        if (kind == MapKind::skew)
            terms = wt::grassmannian_bundle_terms(dim_a, p);
        else
            terms = wt::segre_bundle_terms(dim_a, kind == MapKind::general ? dim_b : dim_a, p);
        for (const auto& t : terms)
            out.push_back({t.omega_twist, t.rank});
        return normalized(out);
    }
    std::optional<wt::TermPrediction> t;
    switch (kind) {
    case MapKind::general:
        t = wt::predict_general(dim_a, dim_b, p);
        break;
    case MapKind::symmetric:
        t = wt::predict_symmetric(dim_a, p);
        break;
    case MapKind::skew:
        t = wt::predict_skew(dim_a, p);
        break;
    default:
        throw UsageError("no closed-form prediction for map kind '" + maps::to_string(kind) + "'");
    }
    if (t)
        out.push_back({t->omega_twist, t->rank});
    return out;
}

void check_predictor(const std::string& predictor)
{
    if (predictor != "closed-form" && predictor != "cohomology")
        throw UsageError("unknown predictor '" + predictor + "' (expected closed-form or cohomology)");
}

void check_range(const RunConfig& c, bool resolve)
{
    if (c.p_min > c.p_max)
        throw UsageError("empty range " + std::to_string(c.p_min) + ":" + std::to_string(c.p_max));
    if (resolve && !(c.p_min <= 0 && c.p_max >= 1))
        throw UsageError("resolve needs a range with p_min <= 0 < 1 <= p_max");
}

Json map_params(MapKind kind, const RunConfig& c)
{
    Json p = Json::object();
    p["kind"] = maps::to_string(kind);
    if (kind == MapKind::general || kind == MapKind::symmetric || kind == MapKind::skew) {
        p["dimA"] = c.dim_a;
        if (kind == MapKind::general)
            p["dimB"] = c.dim_b;
    }
    if (c.command == "resolve")
        p["dimW"] = c.dim_w;
    if (kind == MapKind::general || kind == MapKind::symmetric || kind == MapKind::skew) {
        p["a"] = c.dim_a - 1;
        if (kind == MapKind::general)
            p["b"] = c.dim_b - 1;
    }
    if (c.command == "resolve")
        p["v"] = c.dim_w - 1;
    p["range"] = {c.p_min, c.p_max};
    if (c.force)
        p["force"] = true;
    return p;
}

Json hilbert_json(const std::map<int, std::size_t>& h)
{
    Json out = Json::array();
    for (auto it = h.rbegin(); it != h.rend(); ++it)
        out.push_back({{"degree", it->first}, {"dim", it->second}});
    return out;
}

Exactness exactness_of(const res::ExactnessReport& r)
{
    return {r.d_squared_zero, r.interior_exact, r.minimal, r.seed_minimal};
}

void fill_computed(Report& report, const res::TermTable& table)
{
    for (auto& row : report.rows) {
        row.computed = to_entries(table.at(row.p));
        if (row.predicted)
            row.match = normalized(*row.predicted) == normalized(*row.computed);
    }
}

bool all_rows_match(const Report& report)
{
    return std::all_of(report.rows.begin(), report.rows.end(), [](const Row& r) { return r.match.value_or(true); });
}

Report run_resolve(const RunConfig& c)
{
    const MapKind kind = maps::parse_map_kind(c.kind);
    check_range(c, true);
    check_predictor(c.predictor);
    if (c.retries < 0)
        throw UsageError("--retries must be non-negative");

    Report report;
    report.command = "resolve " + c.kind;
    report.params = map_params(kind, c);
    report.seed = c.seed;
    report.field = c.prime;

    maps::MapSpec spec{kind, c.dim_a, kind == MapKind::general ? c.dim_b : c.dim_a, c.dim_w, c.prime, c.seed, c.force};

    if (kind == MapKind::koszul || kind == MapKind::symplectic) {
        const Morphism phi = maps::make_map(spec);
        const res::TateWindow window = res::build_tate(phi, c.p_min, c.p_max);
        for (int p = c.p_min; p <= c.p_max; ++p)
            report.rows.push_back({p, std::nullopt, std::nullopt, std::nullopt});
        fill_computed(report, res::term_table(window));
        const auto ex = res::verify_exactness(window);
        report.exactness = exactness_of(ex);
        const ext::GradedModule image = ext::image_module(phi);
        report.details["image_hilbert"] = hilbert_json(image.hilbert_function());
        std::size_t top = 0;
        for (const auto& [d, m] : res::top_of_module(image))
            top += m;
        report.details["cover_rank"] = top;
        bool ok = ex.all_pass();
        if (kind == MapKind::koszul) {
            // Image should be wedge^1 W + ... + wedge^{n-1} W, covered by omega_E(1) (x) V.
            std::vector<std::size_t> expected;
            for (int i = 1; i < c.dim_w; ++i)
                expected.push_back(wt::binomial(c.dim_w, i));
            std::vector<std::size_t> got;
            for (const auto& [d, dim] : image.hilbert_function())
                got.push_back(dim);
            std::reverse(got.begin(), got.end());
            const bool koszul_ok = got == expected && top == static_cast<std::size_t>(c.dim_w);
            report.details["expected_image_hilbert"] = expected;
            report.details["koszul_check"] = koszul_ok;
            ok = ok && koszul_ok;
        }
        report.status = ok ? "PASS" : "CHECK_FAILED";
        return report;
    }

    maps::check_guards(spec);
    report.params["predictor"] = c.predictor;
    for (int p = c.p_min; p <= c.p_max; ++p)
        report.rows.push_back({p, predicted_entries(kind, c.predictor, c.dim_a, c.dim_b, p), std::nullopt, std::nullopt});

    const Report expected = report;
    auto make = [&](std::uint64_t seed) {
        maps::MapSpec s = spec;
        s.seed = seed;
        return maps::make_map(s);
    };
    auto accept = [&](const res::TermTable& table) {
        Report trial = expected;
        fill_computed(trial, table);
        return all_rows_match(trial);
    };
    const res::RetryRun run = res::build_with_retries(make, c.p_min, c.p_max, c.seed, c.retries, accept);
    fill_computed(report, run.final_attempt().table);
    report.exactness = exactness_of(run.final_attempt().exactness);
    for (const auto& a : run.attempts)
        report.attempts.push_back(a.seed);
    report.status = res::to_string(run.status);
    return report;
}

Report run_terms(const RunConfig& c)
{
    const MapKind kind = maps::parse_map_kind(c.kind);
    if (kind == MapKind::koszul || kind == MapKind::symplectic)
        throw UsageError("terms supports general, symmetric and skew");
    check_range(c, false);
    check_predictor(c.predictor);
    if (c.dim_a < 1 || (kind == MapKind::general && c.dim_b < 1))
        throw UsageError("terms needs --dimA (and --dimB for general) of at least 1");
    if (kind == MapKind::skew && c.dim_a < 2)
        throw UsageError("skew terms need dimA >= 2");
    Report report;
    report.command = "terms " + c.kind;
    report.params = map_params(kind, c);
    report.params["predictor"] = c.predictor;
    report.seed = c.seed;
    report.field = c.prime;
    for (int p = c.p_min; p <= c.p_max; ++p)
        report.rows.push_back({p, predicted_entries(kind, c.predictor, c.dim_a, c.dim_b, p), std::nullopt, std::nullopt});
    return report;
}

wt::Partition partition_of(const RunConfig& c)
{
    if (c.dim_w < 1)
        throw UsageError("--dimW must be at least 1");
    wt::Partition part(c.partition);
    if (part.length() > static_cast<std::size_t>(c.dim_w - 1))
        throw UsageError("partition has more than v = dimW - 1 nonzero parts");
    return part;
}

Json partition_params(const RunConfig& c, const wt::Partition& part)
{
    Json p = Json::object();
    p["partition"] = part.parts();
    p["dimW"] = c.dim_w;
    p["v"] = c.dim_w - 1;
    p["range"] = {c.p_min, c.p_max};
    return p;
}

Report run_schur(const RunConfig& c)
{
    check_range(c, false);
    const wt::Partition part = partition_of(c);
    const int v = c.dim_w - 1;
    Report report;
    report.command = "schur";
    report.params = partition_params(c, part);
    report.seed = c.seed;
    report.field = c.prime;
    const wt::CohomologyTable table = wt::cohomology_table(part, v, c.p_min, c.p_max);
    for (int p = c.p_min; p <= c.p_max; ++p) {
        const wt::SchurTerm t = wt::schur_terms(part, v, p);
        std::vector<Entry> computed;
        for (int r = 0; r <= v; ++r)
            if (table.at(r, p) != 0)
                computed.push_back({r - p, table.at(r, p)});
        std::vector<Entry> predicted{{t.omega_twist, t.rank}};
        const bool match = normalized(predicted) == normalized(computed);
        report.rows.push_back({p, predicted, computed, match});
    }
    report.status = all_rows_match(report) ? "PASS" : "MISMATCH";
    return report;
}

Report run_cohomology_table(const RunConfig& c)
{
    check_range(c, false);
    const wt::Partition part = partition_of(c);
    const int v = c.dim_w - 1;
    Report report;
    report.command = "cohomology-table";
    report.params = partition_params(c, part);
    report.seed = c.seed;
    report.field = c.prime;
    const wt::CohomologyTable table = wt::cohomology_table(part, v, c.p_min, c.p_max);
    Json columns = Json::array();
    for (int p = c.p_min; p <= c.p_max; ++p)
        columns.push_back(p);
    Json grid = Json::array();
    for (int r = 0; r <= v; ++r) {
        Json values = Json::array();
        for (int p = c.p_min; p <= c.p_max; ++p)
            values.push_back(table.at(r, p));
        grid.push_back({{"r", r}, {"values", values}});
    }
    report.details["columns"] = columns;
    report.details["grid"] = grid;
    return report;
}

wt::Weight weight_of(const RunConfig& c)
{
    if (c.weight.empty())
        throw UsageError("--weight is required");
    if (c.dim_w != 0 && c.dim_w != static_cast<int>(c.weight.size()))
        throw UsageError("--n does not match the number of weight coordinates");
    return wt::Weight{c.weight};
}

Report run_bbw(const RunConfig& c)
{
    const wt::Weight lambda = weight_of(c);
    Report report;
    report.command = "bbw";
    report.params = {{"n", lambda.n()}, {"weight", lambda.coords}};
    report.seed = c.seed;
    report.field = c.prime;
    const auto res = wt::bbw(lambda);
    report.details["zero"] = !res.has_value();
    if (res) {
        report.details["length"] = res->length;
        report.details["dominant"] = res->dominant.coords;
        report.details["dim"] = res->dim;
    }
    return report;
}

Report run_weyl_dim(const RunConfig& c)
{
    const wt::Weight mu = weight_of(c);
    Report report;
    report.command = "weyl-dim";
    report.params = {{"n", mu.n()}, {"weight", mu.coords}};
    report.seed = c.seed;
    report.field = c.prime;
    report.details["dim"] = wt::weyl_dim(mu);
    return report;
}

// Text rendering.

std::string entries_text(const std::optional<std::vector<Entry>>& entries)
{
    if (!entries)
        return "-";
    if (entries->empty())
        return "0";
    std::string out;
    for (const auto& e : *entries) {
        if (!out.empty())
            out += " + ";
        out += "ω(" + std::to_string(e.omega_twist) + ")^" + std::to_string(e.rank);
    }
    return out;
}

std::string entries_csv(const std::optional<std::vector<Entry>>& entries)
{
    if (!entries)
        return "";
    std::string out;
    for (const auto& e : *entries) {
        if (!out.empty())
            out += ";";
        out += std::to_string(e.omega_twist) + ":" + std::to_string(e.rank);
    }
    return out;
}

std::string scalar_text(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

// Display width of a UTF-8 string, counting code points.
std::size_t width(const std::string& s)
{
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w)
{
    const std::size_t have = width(s);
    return s + std::string(have < w ? w - have : 0, ' ');
}

std::string emit_text(const Report& r)
{
    std::ostringstream out;
    out << r.command;
    for (const auto& [k, v] : r.params.items())
        out << "  " << k << "=" << scalar_text(v);
    out << "  field=" << r.field;
    if (r.command.rfind("resolve", 0) == 0)
        out << "  seed=" << r.seed;
    out << "\n";

    if (!r.rows.empty()) {
        std::size_t wp = 9, wc = 8;
        for (const auto& row : r.rows) {
            wp = std::max(wp, width(entries_text(row.predicted)));
            wc = std::max(wc, width(entries_text(row.computed)));
        }
        out << std::setw(4) << "p" << "  " << pad("predicted", wp) << "  " << pad("computed", wc) << "\n";
        for (const auto& row : r.rows) {
            out << std::setw(4) << row.p << "  " << pad(entries_text(row.predicted), wp) << "  "
                << pad(entries_text(row.computed), wc);
            if (row.match)
                out << "  " << (*row.match ? "✓" : "✗");
            out << "\n";
        }
    }

    if (r.details.contains("grid")) {
        const auto& cols = r.details["columns"];
        out << std::setw(6) << "r \\ p";
        for (const auto& p : cols)
            out << std::setw(8) << p.get<int>();
        out << "\n";
        for (const auto& row : r.details["grid"]) {
            out << std::setw(6) << row["r"].get<int>();
            for (const auto& v : row["values"])
                out << std::setw(8) << v.get<std::uint64_t>();
            out << "\n";
        }
    } else {
        for (const auto& [k, v] : r.details.items())
            out << k << ": " << scalar_text(v) << "\n";
    }

    if (r.exactness) {
        auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
        out << "exactness: d2=" << flag(r.exactness->d2) << " interior=" << flag(r.exactness->interior)
            << " minimal=" << flag(r.exactness->minimal) << " seed-minimal=" << flag(r.exactness->seed_minimal) << "\n";
    }
    if (r.attempts.size() > 1) {
        out << "seeds tried:";
        for (auto s : r.attempts)
            out << " " << s;
        out << "\n";
    }
    out << "status: " << r.status << std::fixed << std::setprecision(3) << " (" << r.seconds << " s)\n";
    return out.str();
}

std::string emit_csv(const Report& r)
{
    std::ostringstream out;
    if (r.details.contains("grid")) {
        out << "r,p,value\n";
        const auto& cols = r.details["columns"];
        for (const auto& row : r.details["grid"])
            for (std::size_t i = 0; i < cols.size(); ++i)
                out << row["r"].get<int>() << "," << cols[i].get<int>() << "," << row["values"][i].get<std::uint64_t>()
                    << "\n";
        return out.str();
    }
    if (!r.rows.empty() || r.details.empty()) {
        out << "p,predicted,computed,match\n";
        for (const auto& row : r.rows)
            out << row.p << "," << entries_csv(row.predicted) << "," << entries_csv(row.computed) << ","
                << (row.match ? (*row.match ? "true" : "false") : "") << "\n";
        return out.str();
    }
    out << "key,value\n";
    for (const auto& [k, v] : r.details.items()) {
        std::string value = scalar_text(v);
        if (value.find(',') != std::string::npos)
            value = "\"" + value + "\"";
        out << k << "," << value << "\n";
    }
    return out.str();
}

Json entries_json(const std::optional<std::vector<Entry>>& entries)
{
    if (!entries)
        return nullptr;
    Json out = Json::array();
    for (const auto& e : *entries)
        out.push_back({{"omega_twist", e.omega_twist}, {"rank", e.rank}});
    return out;
}

std::optional<std::vector<Entry>> entries_from(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    std::vector<Entry> out;
    for (const auto& e : j)
        out.push_back({e.at("omega_twist").get<int>(), e.at("rank").get<std::uint64_t>()});
    return out;
}

} // namespace

Format parse_format(const std::string& name)
{
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw UsageError("unknown format '" + name + "' (expected text, json or csv)");
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto colon = text.find(':', text.empty() ? 0 : 1);
    if (colon == std::string::npos)
        throw UsageError("range must look like a:b, got '" + text + "'");
    return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(parse_int(item));
    if (out.empty())
        throw UsageError("empty list");
    return out;
}

int exit_code(const Report& report)
{
    return report.status == "PASS" ? 0 : 1;
}

Report run(const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        PrimeField check(config.prime);
        (void)check;
        if (config.command == "resolve")
            report = run_resolve(config);
        else if (config.command == "terms")
            report = run_terms(config);
        else if (config.command == "schur")
            report = run_schur(config);
        else if (config.command == "cohomology-table")
            report = run_cohomology_table(config);
        else if (config.command == "bbw")
            report = run_bbw(config);
        else if (config.command == "weyl-dim")
            report = run_weyl_dim(config);
        else
            throw UsageError("unknown command '" + config.command + "'");
    } catch (const UsageError&) {
        throw;
    } catch (const maps::DimensionGuard& e) {
        throw UsageError(e.what());
    } catch (const maps::ParityGuard& e) {
        throw UsageError(e.what());
    } catch (const maps::NotSurjectivePossible& e) {
        throw UsageError(e.what());
    } catch (const wt::NonDominant& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json to_json(const Report& r)
{
    Json j = Json::object();
    j["command"] = r.command;
    j["params"] = r.params;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x = Json::object();
        x["p"] = row.p;
        x["predicted"] = entries_json(row.predicted);
        x["computed"] = entries_json(row.computed);
        x["match"] = row.match ? Json(*row.match) : Json(nullptr);
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    if (r.exactness)
        j["exactness"] = {{"d2", r.exactness->d2},
                          {"interior", r.exactness->interior},
                          {"minimal", r.exactness->minimal},
                          {"seed_minimal", r.exactness->seed_minimal}};
    else
        j["exactness"] = nullptr;
    j["seed"] = r.seed;
    j["field"] = r.field;
    j["status"] = r.status;
    j["attempts"] = r.attempts;
    j["details"] = r.details;
    return j;
}

Report from_json(const Json& j)
{
    Report r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    for (const auto& x : j.at("rows")) {
        Row row{x.at("p").get<int>(), entries_from(x.at("predicted")), entries_from(x.at("computed")), std::nullopt};
        if (!x.at("match").is_null())
            row.match = x.at("match").get<bool>();
        r.rows.push_back(std::move(row));
    }
    if (!j.at("exactness").is_null()) {
        const auto& e = j.at("exactness");
        r.exactness = Exactness{e.at("d2").get<bool>(), e.at("interior").get<bool>(), e.at("minimal").get<bool>(),
                                e.at("seed_minimal").get<bool>()};
    }
    r.seed = j.at("seed").get<std::uint64_t>();
    r.field = j.at("field").get<std::uint32_t>();
    r.status = j.at("status").get<std::string>();
    r.attempts = j.at("attempts").get<std::vector<std::uint64_t>>();
    r.details = j.at("details");
    return r;
}

std::string emit(const Report& report, Format format)
{
    switch (format) {
    case Format::text:
        return emit_text(report);
    case Format::json:
        return to_json(report).dump(2) + "\n";
    case Format::csv:
        return emit_csv(report);
    }
    return {};
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tate resolutions over an exterior algebra, checked against closed-form term predictions"};
    app.require_subcommand(1);

    RunConfig config;
    std::string range;
    std::string weight;
    std::string partition;
    std::string format = "text";
    std::uint32_t prime = la::kDefaultPrime;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", prime, "prime field size")->capture_default_str();
        sub->add_option("--format", format, "text, json or csv")->capture_default_str();
    };
    auto map_options = [&](CLI::App* sub, bool with_w) {
        sub->add_option("kind", config.kind, "map kind")->required();
        sub->add_option("--dimA", config.dim_a, "dimension of A");
        sub->add_option("--dimB", config.dim_b, "dimension of B (general maps)");
        if (with_w)
            sub->add_option("--dimW", config.dim_w, "dimension of W = V^*");
        sub->add_option("--range", range, "window p_min:p_max")->capture_default_str();
        sub->add_option("--predictor", config.predictor, "closed-form or cohomology")->capture_default_str();
    };

    CLI::App* resolve = app.add_subcommand("resolve", "build a Tate window and compare with the prediction");
    map_options(resolve, true);
    resolve->add_option("--seed", config.seed, "seed of the random surjection")->capture_default_str();
    resolve->add_option("--retries", config.retries, "extra seeds to try on a mismatch")->capture_default_str();
    resolve->add_flag("--force", config.force, "skip the dimension guards");
    common(resolve);

    CLI::App* terms = app.add_subcommand("terms", "print predicted terms only");
    map_options(terms, false);
    common(terms);

    CLI::App* schur = app.add_subcommand("schur", "pure terms of a Schur bundle of Omega(1), checked against bbw");
    CLI::App* table = app.add_subcommand("cohomology-table", "dim H^r of twists of a Schur bundle of Omega(1)");
    for (CLI::App* sub : {schur, table}) {
        sub->add_option("--partition", partition, "comma-separated parts")->required();
        sub->add_option("--dimW", config.dim_w, "dimension of W")->required();
        sub->add_option("--range", range, "columns p_min:p_max")->capture_default_str();
        common(sub);
    }

    CLI::App* bbw = app.add_subcommand("bbw", "Borel-Bott-Weil for a GL_n weight");
    CLI::App* weyl = app.add_subcommand("weyl-dim", "dimension of an irreducible GL_n representation");
    for (CLI::App* sub : {bbw, weyl}) {
        sub->add_option("--weight", weight, "comma-separated coordinates")->required();
        sub->add_option("--n", config.dim_w, "number of coordinates (optional check)");
        common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.prime = prime;
        config.format = parse_format(format);
        if (!range.empty())
            std::tie(config.p_min, config.p_max) = parse_range(range);
        else if (config.command == "schur" || config.command == "cohomology-table")
            std::tie(config.p_min, config.p_max) = std::pair{-5, 6};
        if (!weight.empty())
            config.weight = parse_int_list(weight);
        if (!partition.empty())
            config.partition = parse_int_list(partition);
        const Report report = run(config);
        out << emit(report, config.format);
        return exit_code(report);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tate::cli
