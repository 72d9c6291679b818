#include "rooks/cli.hpp"

#include "rooks/arrangement.hpp"
#include "rooks/bijection.hpp"
#include "rooks/board.hpp"
#include "rooks/graph.hpp"
#include "rooks/json_io.hpp"
#include "rooks/series.hpp"
#include "rooks/tree.hpp"
#include "rooks/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace rooks::cli {
namespace {

using io::Json;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    Json payload;
    Table table;
    /// A verification ran to completion and found a mismatch.
    bool failed = false;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

std::string latex_field(const std::string& s)
{
    std::string escaped;
    for (char ch : s) {
        if (ch == '_' || ch == '&' || ch == '%' || ch == '#') escaped += '\\';
        escaped += ch;
    }
    return escaped;
}

void render(const Output& output, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << output.payload.dump() << "\n";
        return;
    }
    const auto line = [&](const std::vector<std::string>& cells, const auto& field, const char* sep, const char* end) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? sep : "") << field(cells[i]);
        out << end;
    };
    if (format == "csv") {
        line(output.table.headers, csv_field, ",", "\n");
        for (const auto& row : output.table.rows) line(row, csv_field, ",", "\n");
        return;
    }
    out << "\\begin{tabular}{" << std::string(output.table.headers.size(), 'l') << "}\n";
    line(output.table.headers, latex_field, " & ", " \\\\\n\\hline\n");
    for (const auto& row : output.table.rows) line(row, latex_field, " & ", " \\\\\n");
    out << "\\end{tabular}\n";
}

Table polynomial_table(const IntegerPolynomial& p)
{
    Table t{{"degree", "coefficient"}, {}};
    for (int i = 0; i <= p.degree(); ++i)
        t.rows.push_back({std::to_string(i), to_string(p.coefficient(static_cast<std::size_t>(i)))});
    return t;
}

std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw InvalidArgument("cannot open " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

/// "u1=1/2,v1=3" -> {"u1": 1/2, "v1": 3}.
std::map<std::string, Rational> parse_assignments(const std::string& text)
{
    std::map<std::string, Rational> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw InvalidArgument("expected name=value, got \"" + item + "\"");
        const std::string name = item.substr(0, eq);
        if (!values.emplace(name, parse_rational(item.substr(eq + 1))).second)
            throw InvalidArgument("parameter " + name + " given twice");
    }
    return values;
}

/// Reads u1..uk and v1..vk, rejecting missing or unknown names.
std::pair<std::vector<Rational>, std::vector<Rational>> uv_parameters(const std::string& text, int k)
{
    auto values = parse_assignments(text);
    std::vector<Rational> u, v;
    for (const char prefix : {'u', 'v'}) {
        for (int i = 1; i <= k; ++i) {
            const std::string name = prefix + std::to_string(i);
            const auto it = values.find(name);
            if (it == values.end()) throw InvalidArgument("missing parameter " + name);
            (prefix == 'u' ? u : v).push_back(it->second);
            values.erase(it);
        }
    }
    if (!values.empty()) throw InvalidArgument("unknown parameter " + values.begin()->first);
    return {u, v};
}

Output report_output(const VerificationReport& report)
{
    Output o{io::to_json(report), {}, !report.passed};
    o.table = {{"identity", "order", "status", "first_mismatch"},
               {{report.identity, std::to_string(report.order), report.passed ? "pass" : "fail",
                 report.first_mismatch ? std::to_string(*report.first_mismatch) : ""}}};
    return o;
}

class Application {
public:
    Application(std::istream& in) : in_(in) {}

    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
    {
        CLI::App app{"Exact rook-theoretic computations: boards, trees, arrangements, graphs and series", "rooks"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--format", format_, "Output format")
            ->check(CLI::IsMember({"json", "csv", "latex"}))
            ->capture_default_str();
        app.add_option("--max-states", limits_.max_states, "Cap on dynamic-programming states")->capture_default_str();
        app.add_option("--max-enum", limits_.max_enum, "Cap on enumerated objects")->capture_default_str();
        app.add_flag("--timing", timing_, "Print elapsed time to the diagnostic stream");

        add_boards(app);
        add_trees(app);
        add_bijection(app);
        add_gessel(app);
        add_arrangements(app);
        add_graphs(app);
        add_series(app);
        add_verify(app);

        std::vector<const char*> argv{"rooks"};
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return exit_ok;
        } catch (const CLI::CallForAllHelp& e) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n" << app.help();
            return exit_invalid_input;
        }

        const auto start = std::chrono::steady_clock::now();
        int code = exit_ok;
        try {
            if (!action_) throw InvalidArgument("missing subcommand");
            const Output output = action_();
            render(output, format_, out);
            code = output.failed ? exit_verification_failed : exit_ok;
        } catch (const InvalidArgument& e) {
            err << "invalid input: " << e.what() << "\n";
            code = exit_invalid_input;
        } catch (const ResourceLimit& e) {
            err << "resource limit: " << e.what() << "\n";
            code = exit_resource_limit;
        } catch (const Error& e) {
            err << "verification failed: " << e.what() << "\n";
            code = exit_verification_failed;
        }
        if (timing_) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            err << "elapsed: " << ms << " ms\n";
        }
        return code;
    }

private:
    struct BoardSource {
        std::string family;
        int n = 0;
        int t = 0;
        std::vector<int> lambda;
        std::vector<int> mu;
        std::string file;
    };

    void set_action(CLI::App* sub, std::function<Output()> action)
    {
        sub->callback([this, action = std::move(action)] { action_ = action; });
    }

    void add_board_options(CLI::App* sub, BoardSource& src)
    {
        sub->add_option("--family", src.family, "Board family")->check(CLI::IsMember({"catalan", "shi", "linial"}));
        sub->add_option("--n", src.n, "Family size parameter n");
        sub->add_option("--t", src.t, "Family width parameter t");
        sub->add_option("--lambda", src.lambda, "Outer shape, e.g. 6,5,4")->delimiter(',');
        sub->add_option("--mu", src.mu, "Inner shape, e.g. 3,2,1")->delimiter(',');
        sub->add_option("--board", src.file, "Board JSON file (- for stdin)");
    }

    Board resolve_board(const BoardSource& src) const
    {
        const int sources = !src.family.empty() + !src.lambda.empty() + !src.file.empty();
        if (sources != 1) throw InvalidArgument("give exactly one of --family, --lambda or --board");
        if (!src.mu.empty() && src.lambda.empty()) throw InvalidArgument("--mu needs --lambda");
        if (!src.family.empty()) {
            if (src.family == "catalan") return catalan_board(src.t, src.n);
            if (src.family == "shi") return shi_board(src.t, src.n);
            return linial_board(src.t, src.n);
        }
        if (!src.lambda.empty()) return skew_ferrers(src.lambda, src.mu);
        return io::board_from_json(io::parse(read_input(src.file, in_)));
    }

    void add_boards(CLI::App& app)
    {
        auto* boards = app.add_subcommand("boards", "Rook numbers and factorial polynomials of boards");
        boards->require_subcommand(1);

        auto* rv = boards->add_subcommand("rook-vector", "Rook numbers r_0..r_m");
        add_board_options(rv, rook_vector_board_);
        set_action(rv, [this] {
            const RookVector r = rook_numbers(resolve_board(rook_vector_board_), limits_);
            Output o{io::to_json(r), {{"k", "r_k"}, {}}};
            for (std::size_t k = 0; k < r.size(); ++k) o.table.rows.push_back({std::to_string(k), to_string(r[k])});
            return o;
        });

        auto* fp = boards->add_subcommand("factorial-poly", "Factorial polynomial from rook numbers");
        add_board_options(fp, factorial_board_);
        set_action(fp, [this] {
            const IntegerPolynomial p = factorial_polynomial(resolve_board(factorial_board_), limits_);
            return Output{Json{{"R", io::to_json(p)}}, polynomial_table(p)};
        });

        auto* gp = boards->add_subcommand("gjw-poly", "Factorial polynomial as a sum over set partitions");
        add_board_options(gp, gjw_board_);
        set_action(gp, [this] {
            const IntegerPolynomial p = gjw_factorial_polynomial(resolve_board(gjw_board_), limits_);
            return Output{Json{{"R", io::to_json(p)}}, polynomial_table(p)};
        });
    }

    void add_trees(CLI::App& app)
    {
        auto* trees = app.add_subcommand("trees", "Plane k-ary trees");
        trees->require_subcommand(1);
        auto* count = trees->add_subcommand("count", "Count the trees of a class");
        count->add_option("--class", tree_class_, "all, increasing, right-increasing, ltree or ltree-b")->required();
        count->add_option("--n", tree_n_, "Number of nodes")->required();
        count->add_option("--k", tree_k_, "Arity")->required();
        set_action(count, [this] {
            const auto cls = parse_tree_class(tree_class_);
            if (!cls) throw InvalidArgument("unknown tree class " + tree_class_);
            const BigInt c = count_class(tree_n_, tree_k_, *cls, limits_);
            Output o{Json{{"class", tree_class_}, {"n", tree_n_}, {"k", tree_k_}, {"count", io::to_json(c)}}, {}};
            o.table = {{"class", "n", "k", "count"},
                       {{tree_class_, std::to_string(tree_n_), std::to_string(tree_k_), to_string(c)}}};
            return o;
        });
    }

    static Table tree_table(const PlaneKaryTree& tree)
    {
        Table t{{"label", "parent", "slot"}, {}};
        for (int label = 1; label <= tree.n(); ++label)
            t.rows.push_back({std::to_string(label), std::to_string(tree.parent(label)), std::to_string(tree.slot(label))});
        return t;
    }

    void add_bijection(CLI::App& app)
    {
        auto* bijection = app.add_subcommand("bijection", "Colored placements and plane k-ary trees");
        bijection->require_subcommand(1);

        auto* forward = bijection->add_subcommand("forward", "Placement to tree");
        forward->add_option("--input", forward_input_, "Placement JSON (- for stdin)")->required();
        set_action(forward, [this] {
            const Json j = io::parse(read_input(forward_input_, in_));
            const ColoredPlacement g =
                j.contains("f") ? phi(io::flat_placement_from_json(j)) : io::colored_placement_from_json(j);
            const PlaneKaryTree tree = psi(g);
            return Output{io::to_json(tree), tree_table(tree)};
        });

        auto* inverse = bijection->add_subcommand("inverse", "Tree to placement");
        inverse->add_option("--input", inverse_input_, "Tree JSON (- for stdin)")->required();
        set_action(inverse, [this] {
            const ColoredPlacement g = psi_inverse(io::tree_from_json(io::parse(read_input(inverse_input_, in_))));
            Output o{io::to_json(g), {{"i", "column", "colour"}, {}}};
            for (std::size_t i = 0; i < g.g.size(); ++i)
                o.table.rows.push_back(
                    {std::to_string(i + 1), std::to_string(g.g[i].column), std::to_string(g.g[i].color)});
            return o;
        });
    }

    void add_gessel(CLI::App& app)
    {
        auto* gessel = app.add_subcommand("gessel", "Gessel polynomial G_{n,k}");
        gessel->add_option("--n", gessel_n_, "Number of nodes")->required();
        gessel->add_option("--k", gessel_k_, "Arity")->required();
        gessel->add_option("--eval", gessel_eval_, "Evaluate at u1=..,..,v1=..");
        set_action(gessel, [this] {
            const MultivariatePolynomial p = gessel_polynomial(gessel_n_, gessel_k_, limits_);
            if (!gessel_eval_.empty()) {
                auto [u, v] = uv_parameters(gessel_eval_, gessel_k_);
                u.insert(u.end(), v.begin(), v.end());
                const Rational value = p.evaluate(u);
                return Output{Json{{"n", gessel_n_}, {"k", gessel_k_}, {"value", io::to_json(value)}},
                              {{"n", "k", "value"}, {{std::to_string(gessel_n_), std::to_string(gessel_k_), to_string(value)}}}};
            }
            Output o{io::to_json(p), {}};
            for (int i = 1; i <= gessel_k_; ++i) o.table.headers.push_back("u" + std::to_string(i));
            for (int i = 1; i <= gessel_k_; ++i) o.table.headers.push_back("v" + std::to_string(i));
            o.table.headers.push_back("coefficient");
            for (const auto& [exponents, c] : p.terms()) {
                std::vector<std::string> row;
                for (int e : exponents) row.push_back(std::to_string(e));
                row.push_back(to_string(c));
                o.table.rows.push_back(std::move(row));
            }
            return o;
        });
    }

    struct ArrangementOptions {
        std::string family;
        int n = 0;
        int a = 1;
        std::optional<int> b;
        std::string method = "formula";
    };

    void add_arrangement_options(CLI::App* sub, ArrangementOptions& opts, bool with_method)
    {
        sub->add_option("--family", opts.family, "linial (a-1,a+1), catalan (a,a) or shi (a,a+1)")
            ->check(CLI::IsMember({"linial", "catalan", "shi"}));
        sub->add_option("--n", opts.n, "Ambient dimension n")->required();
        sub->add_option("--a", opts.a, "Parameter a")->required();
        sub->add_option("--b", opts.b, "Parameter b; without it the family (default linial) decides");
        if (with_method)
            sub->add_option("--method", opts.method, "formula or finite-field")
                ->check(CLI::IsMember({"formula", "finite-field"}))
                ->capture_default_str();
    }

    static TruncatedAffineSpec resolve_spec(const ArrangementOptions& opts)
    {
        if (opts.b) {
            if (!opts.family.empty()) throw InvalidArgument("give either --family or --b, not both");
            TruncatedAffineSpec spec{opts.n, opts.a, *opts.b};
            spec.validate();
            return spec;
        }
        if (opts.family == "catalan") return TruncatedAffineSpec::catalan(opts.n, opts.a);
        if (opts.family == "shi") return TruncatedAffineSpec::shi(opts.n, opts.a);
        return TruncatedAffineSpec::linial(opts.n, opts.a);
    }

    void add_arrangements(CLI::App& app)
    {
        auto* arr = app.add_subcommand("arrangements", "Truncated affine arrangements");
        arr->require_subcommand(1);

        auto* cp = arr->add_subcommand("charpoly", "Characteristic polynomial and region counts");
        add_arrangement_options(cp, charpoly_opts_, true);
        set_action(cp, [this] {
            const TruncatedAffineSpec spec = resolve_spec(charpoly_opts_);
            const IntegerPolynomial chi = charpoly(spec, *parse_charpoly_method(charpoly_opts_.method));
            const RegionCounts rc = region_counts(chi, spec.n);
            Output o{Json{{"n", spec.n},
                          {"a", spec.a},
                          {"b", spec.b},
                          {"chi", io::to_json(chi, "q")},
                          {"regions", io::to_json(rc.regions)},
                          {"bounded", io::to_json(rc.bounded)}},
                     polynomial_table(chi)};
            return o;
        });

        auto* rg = arr->add_subcommand("regions", "Numbers of regions and bounded regions");
        add_arrangement_options(rg, regions_opts_, true);
        set_action(rg, [this] {
            const TruncatedAffineSpec spec = resolve_spec(regions_opts_);
            const RegionCounts rc = region_counts(spec, *parse_charpoly_method(regions_opts_.method));
            return Output{Json{{"regions", io::to_json(rc.regions)}, {"bounded", io::to_json(rc.bounded)}},
                          {{"regions", "bounded"}, {{to_string(rc.regions), to_string(rc.bounded)}}}};
        });

        auto* bs = arr->add_subcommand("bounded-seq", "Bounded regions of the extended Linial arrangement, n = 1..N");
        bs->add_option("--n", bounded_seq_n_, "Largest n")->required();
        bs->add_option("--a", bounded_seq_a_, "Parameter a")->required();
        set_action(bs, [this] {
            const auto seq = bounded_region_sequence(bounded_seq_a_, bounded_seq_n_);
            Output o{Json{{"a", bounded_seq_a_}, {"bounded", Json::array()}}, {{"n", "bounded"}, {}}};
            for (std::size_t i = 0; i < seq.size(); ++i) {
                o.payload["bounded"].push_back(io::to_json(seq[i]));
                o.table.rows.push_back({std::to_string(i + 1), to_string(seq[i])});
            }
            return o;
        });

        auto* sq = arr->add_subcommand("sequences", "Region counts by direct sequence enumeration");
        sq->add_option("--n", sequences_n_, "Ambient dimension n")->required();
        sq->add_option("--a", sequences_a_, "Parameter a")->required();
        set_action(sq, [this] {
            const BigInt r = sequence_count(sequences_n_, sequences_a_, RegionKind::regions, limits_);
            const BigInt b = sequence_count(sequences_n_, sequences_a_, RegionKind::bounded, limits_);
            return Output{Json{{"regions", io::to_json(r)}, {"bounded", io::to_json(b)}},
                          {{"regions", "bounded"}, {{to_string(r), to_string(b)}}}};
        });
    }

    struct GraphOptions {
        int n = 0;
        int t = 0;
        std::string file;
        bool complement = false;
    };

    void add_graph_options(CLI::App* sub, GraphOptions& opts)
    {
        sub->add_option("--n", opts.n, "Linial graph parameter n");
        sub->add_option("--t", opts.t, "Linial graph parameter t");
        sub->add_option("--graph", opts.file, "Graph JSON file (- for stdin)");
        sub->add_flag("--complement", opts.complement, "Use the complement graph");
    }

    SimpleGraph resolve_graph(const GraphOptions& opts) const
    {
        const bool from_file = !opts.file.empty();
        if (from_file == (opts.n != 0)) throw InvalidArgument("give either --n/--t or --graph");
        SimpleGraph g = from_file ? io::graph_from_json(io::parse(read_input(opts.file, in_))) : linial_graph(opts.t, opts.n);
        return opts.complement ? complement(g) : g;
    }

    void add_graphs(CLI::App& app)
    {
        auto* graphs = app.add_subcommand("graphs", "Linial graphs");
        graphs->require_subcommand(1);

        auto* ch = graphs->add_subcommand("chromatic", "Chromatic polynomial");
        add_graph_options(ch, chromatic_opts_);
        set_action(ch, [this] {
            const IntegerPolynomial p = chromatic_polynomial(resolve_graph(chromatic_opts_));
            return Output{Json{{"chromatic", io::to_json(p)}}, polynomial_table(p)};
        });

        auto* mt = graphs->add_subcommand("matchings", "Maximum matchings");
        add_graph_options(mt, matching_opts_);
        set_action(mt, [this] {
            const MatchingCount m = count_maximum_matchings(resolve_graph(matching_opts_));
            return Output{Json{{"size", m.size}, {"count", io::to_json(m.count)}},
                          {{"size", "count"}, {{std::to_string(m.size), to_string(m.count)}}}};
        });
    }

    void add_series(CLI::App& app)
    {
        auto* series = app.add_subcommand("series", "Generating-function identities");
        series->require_subcommand(1);
        auto* verify = series->add_subcommand("verify", "Check an identity to a given order");
        verify->add_option("--identity", series_identity_, "ltree-egf, f-equation, drake or gessel-k2")
            ->required()
            ->check(CLI::IsMember({"ltree-egf", "f-equation", "drake", "gessel-k2"}));
        verify->add_option("--k", series_k_, "Arity")->capture_default_str();
        verify->add_option("--order", series_order_, "Truncation order")->required();
        verify->add_option("--params", series_params_, "u1=..,..,v1=.. for drake and gessel-k2");
        set_action(verify, [this] {
            if (series_identity_ == "ltree-egf") return report_output(verify_ltree_egf(series_k_, series_order_, limits_));
            if (series_identity_ == "f-equation") return report_output(verify_f_equation(series_k_, series_order_));
            if (series_identity_ == "drake") {
                const auto [u, v] = uv_parameters(series_params_, series_k_);
                return report_output(verify_drake_inverse(series_k_, u, v, series_order_, limits_));
            }
            if (series_k_ != 2) throw InvalidArgument("gessel-k2 needs --k 2");
            const auto [u, v] = uv_parameters(series_params_, 2);
            return report_output(verify_gessel_k2_equation(u[0], u[1], v[0], v[1], series_order_, limits_));
        });
    }

    void add_verify(CLI::App& app)
    {
        auto* verify = app.add_subcommand("verify", "Cross-verification suites");
        verify->require_subcommand(1);
        auto* all = verify->add_subcommand("all", "Run every suite");
        all->add_option("--max-n", verify_max_n_, "Largest size checked")->capture_default_str();
        set_action(all, [this] {
            const auto suites = run_all_suites(verify_max_n_, limits_);
            Output o{Json{{"max_n", verify_max_n_}, {"status", "pass"}, {"suites", Json::array()}},
                     {{"suite", "checks", "status"}, {}}};
            for (const auto& s : suites) {
                Json failures = Json::array();
                for (const auto& f : s.failures) failures.push_back(f);
                o.payload["suites"].push_back(Json{{"name", s.name},
                                                   {"checks", s.checks},
                                                   {"status", s.passed() ? "pass" : "fail"},
                                                   {"failures", failures}});
                o.table.rows.push_back({s.name, std::to_string(s.checks), s.passed() ? "pass" : "fail"});
                if (!s.passed()) o.failed = true;
            }
            if (o.failed) o.payload["status"] = "fail";
            return o;
        });
    }

    std::istream& in_;
    std::string format_ = "json";
    Limits limits_;
    bool timing_ = false;
    std::function<Output()> action_;

    BoardSource rook_vector_board_, factorial_board_, gjw_board_;
    std::string tree_class_;
    int tree_n_ = 0, tree_k_ = 0;
    std::string forward_input_, inverse_input_;
    int gessel_n_ = 0, gessel_k_ = 0;
    std::string gessel_eval_;
    ArrangementOptions charpoly_opts_, regions_opts_;
    int bounded_seq_n_ = 0, bounded_seq_a_ = 1;
    int sequences_n_ = 0, sequences_a_ = 1;
    GraphOptions chromatic_opts_, matching_opts_;
    std::string series_identity_;
    int series_k_ = 2, series_order_ = 0;
    std::string series_params_;
    int verify_max_n_ = 5;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Application app(in);
    return app.run(args, out, err);
}

}  // namespace rooks::cli
