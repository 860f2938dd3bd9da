#include "commands.hpp"

#include "csv_io.hpp"
#include "fuzzy/fuzzy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fuzzy::cli {

using nlohmann::json;

namespace {

enum class Format { text, json, series };

struct Ctx {
    std::ostream& out;
    Format format;
    bool header;
    std::string command;

    void begin() const {
        if (format == Format::text && header) out << "# fuzzy " << command << '\n';
    }
};

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(6) << v;
    return os.str();
}

std::string join(const Vector& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + num(v[i]);
    return s;
}

std::string bits(const StateVector& s) { return to_string(s); }

Labels labels_or_default(const Labels& l, const std::string& prefix, std::size_t n) {
    if (!l.empty()) return l;
    Labels out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

void print_matrix(std::ostream& os, const Matrix& m) {
    const Labels rl = labels_or_default(m.row_labels(), "r", m.rows());
    const Labels cl = labels_or_default(m.col_labels(), "c", m.cols());
    std::size_t w = 1;
    for (const auto& s : rl) w = std::max(w, s.size());
    std::vector<std::size_t> cw(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        cw[j] = cl[j].size();
        for (std::size_t i = 0; i < m.rows(); ++i) cw[j] = std::max(cw[j], num(m(i, j)).size());
    }
    os << std::string(w, ' ');
    for (std::size_t j = 0; j < m.cols(); ++j) os << "  " << std::setw(static_cast<int>(cw[j])) << cl[j];
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << std::left << std::setw(static_cast<int>(w)) << rl[i] << std::right;
        for (std::size_t j = 0; j < m.cols(); ++j) os << "  " << std::setw(static_cast<int>(cw[j])) << num(m(i, j));
        os << '\n';
    }
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    json j{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
    if (!m.row_labels().empty()) j["row_labels"] = m.row_labels();
    if (!m.col_labels().empty()) j["col_labels"] = m.col_labels();
    return j;
}

json to_json(const StateVector& s) { return s.bits; }

void emit_json(const Ctx& ctx, json j) {
    j["command"] = ctx.command;
    ctx.out << j.dump(2) << '\n';
}

SdMode parse_sd_mode(const std::string& s) {
    if (s == "sample") return SdMode::sample_n_minus_1;
    if (s == "abs") return SdMode::abs_deviation;
    throw io::ParseError("unknown sd mode '" + s + "' (expected sample or abs)");
}

const char* sd_mode_name(SdMode m) { return m == SdMode::sample_n_minus_1 ? "sample" : "abs"; }

// Accepts 1-based indices or node labels.
std::vector<std::size_t> resolve_nodes(const std::string& list, const Labels& labels, std::size_t n) {
    std::vector<std::size_t> out;
    std::istringstream is(list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        const auto b = tok.find_first_not_of(' ');
        const auto e = tok.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        tok = tok.substr(b, e - b + 1);
        auto it = std::find(labels.begin(), labels.end(), tok);
        if (it != labels.end()) {
            out.push_back(static_cast<std::size_t>(it - labels.begin()));
            continue;
        }
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 1 || static_cast<std::size_t>(v) > n) {
            throw io::ParseError("node '" + tok + "' is neither a label nor an index in 1.." + std::to_string(n));
        }
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    if (out.empty()) throw io::ParseError("no nodes given");
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& list, std::size_t n) {
    return resolve_nodes(list, {}, n);
}

// ---------------------------------------------------------------- cetd

struct CetdOpts {
    std::string raw, intervals, alphas = "0.15,0.35,0.45,0.75", sd_mode = "sample";
};

void cmd_cetd(const Ctx& ctx, const CetdOpts& o) {
    Matrix m = io::read_matrix_file(o.raw);
    RawDataTable t;
    if (!o.intervals.empty()) {
        t.counts = m;
        t.interval_lengths = io::parse_number_list(o.intervals);
        t.attribute_labels = m.col_labels();
    } else {
        if (m.cols() < 2) throw io::ParseError(o.raw + ": need an interval column and at least one count column");
        t.interval_lengths = m.col(0);
        t.counts = Matrix(m.rows(), m.cols() - 1);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 1; j < m.cols(); ++j) t.counts(i, j - 1) = m(i, j);
        if (!m.col_labels().empty()) t.attribute_labels.assign(m.col_labels().begin() + 1, m.col_labels().end());
    }
    t.group_labels = m.row_labels();
    t.counts.set_row_labels(t.group_labels);
    t.counts.set_col_labels(t.attribute_labels);
    const CetdReport rep = cetd_pipeline(t, io::parse_number_list(o.alphas), parse_sd_mode(o.sd_mode));
    const Labels groups = labels_or_default(t.group_labels, "G", t.counts.rows());

    if (ctx.format == Format::json) {
        json rtds = json::array();
        for (const auto& r : rep.rtds) rtds.push_back({{"alpha", r.alpha}, {"rtd", to_json(r.rtd)}, {"row_sums", r.row_sums}});
        emit_json(ctx, {{"inputs", {{"raw", o.raw}, {"interval_lengths", t.interval_lengths}, {"sd_mode", o.sd_mode}}},
                        {"atd", to_json(rep.atd)},
                        {"stats", {{"means", rep.stats.means}, {"sds", rep.stats.sds}, {"sd_mode", sd_mode_name(rep.stats.sd_mode)}}},
                        {"rtds", rtds},
                        {"cetd", to_json(rep.cetd)},
                        {"cetd_row_sums", rep.cetd_row_sums}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "group";
        for (const auto& r : rep.rtds) ctx.out << ",alpha_" << num(r.alpha);
        ctx.out << ",cetd\n";
        for (std::size_t i = 0; i < groups.size(); ++i) {
            ctx.out << groups[i];
            for (const auto& r : rep.rtds) ctx.out << ',' << num(r.row_sums[i]);
            ctx.out << ',' << num(rep.cetd_row_sums[i]) << '\n';
        }
        return;
    }
    ctx.begin();
    ctx.out << "ATD\n";
    print_matrix(ctx.out, rep.atd);
    ctx.out << "column means: " << join(rep.stats.means) << '\n';
    ctx.out << "column sds (" << sd_mode_name(rep.stats.sd_mode) << "): " << join(rep.stats.sds) << '\n';
    for (const auto& r : rep.rtds) {
        ctx.out << "\nRTD alpha=" << num(r.alpha) << '\n';
        print_matrix(ctx.out, r.rtd);
        ctx.out << "row sums: " << join(r.row_sums) << '\n';
    }
    ctx.out << "\nCETD\n";
    print_matrix(ctx.out, rep.cetd);
    ctx.out << "CETD row sums: " << join(rep.cetd_row_sums) << '\n';
}

// ---------------------------------------------------------------- fcm

struct FcmOpts {
    std::vector<std::string> matrices;
    std::vector<std::string> blocks;
    std::string on;
    double theta = 1.0;
    std::size_t n = 0;
    std::size_t max_steps = kDefaultMaxSteps;
};

Fcm load_fcm(const std::string& path, double theta) {
    Matrix m = io::read_matrix_file(path);
    Labels labels = m.row_labels().empty() ? m.col_labels() : m.row_labels();
    return Fcm{m, labels, theta};
}

void report_fcm_run(const Ctx& ctx, const Fcm& f, const HiddenPattern& hp, json inputs) {
    const Labels labels = labels_or_default(f.node_labels, "C", f.size());
    if (ctx.format == Format::json) {
        json trace = json::array(), term = json::array();
        for (const auto& s : hp.trace) trace.push_back(to_json(s));
        for (const auto& s : hp.terminal_states) term.push_back(to_json(s));
        emit_json(ctx, {{"inputs", inputs}, {"node_labels", labels}, {"trace", trace}, {"kind", to_string(hp.kind)},
                        {"terminal_states", term}, {"period", hp.period()}, {"steps", hp.steps}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "step";
        for (const auto& l : labels) ctx.out << ',' << l;
        ctx.out << '\n';
        for (std::size_t t = 0; t < hp.trace.size(); ++t) {
            ctx.out << t;
            for (int b : hp.trace[t].bits) ctx.out << ',' << b;
            ctx.out << '\n';
        }
        return;
    }
    ctx.begin();
    for (std::size_t t = 0; t < hp.trace.size(); ++t) ctx.out << "step " << t << ": " << bits(hp.trace[t]) << '\n';
    ctx.out << "hidden pattern: " << to_string(hp.kind);
    if (hp.kind == PatternKind::limit_cycle) ctx.out << " (period " << hp.period() << ")";
    ctx.out << '\n';
    for (const auto& s : hp.terminal_states) {
        ctx.out << "  " << bits(s) << " on:";
        for (std::size_t i = 0; i < s.bits.size(); ++i)
            if (s.bits[i]) ctx.out << ' ' << labels[i];
        ctx.out << '\n';
    }
}

void report_matrix(const Ctx& ctx, const Matrix& m, json extra = json::object()) {
    if (ctx.format == Format::json) {
        extra["matrix"] = to_json(m);
        emit_json(ctx, extra);
    } else if (ctx.format == Format::series) {
        ctx.out << io::serialize_matrix_csv(m);
    } else {
        ctx.begin();
        print_matrix(ctx.out, m);
    }
}

void cmd_fcm_run(const Ctx& ctx, const FcmOpts& o) {
    Fcm f = load_fcm(o.matrices.at(0), o.theta);
    const auto on = resolve_nodes(o.on, f.node_labels, f.size());
    const HiddenPattern hp = fcm_hidden_pattern(f, make_state(f.size(), on), o.max_steps);
    report_fcm_run(ctx, f, hp, {{"matrix", o.matrices.at(0)}, {"on", on}, {"theta", o.theta}});
}

void cmd_fcm_combine(const Ctx& ctx, const FcmOpts& o) {
    std::vector<Fcm> maps;
    for (const auto& p : o.matrices) maps.push_back(load_fcm(p, o.theta));
    const Fcm c = fcm_combine(maps, o.theta);
    report_matrix(ctx, c.adjacency, {{"inputs", {{"matrices", o.matrices}, {"theta", o.theta}}}});
}

void cmd_fcm_blocks(const Ctx& ctx, const FcmOpts& o) {
    if (o.n == 0) throw io::ParseError("--n must be positive");
    std::vector<Block> blocks;
    for (const auto& spec : o.blocks) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw io::ParseError("block '" + spec + "' must read INDICES=FILE");
        blocks.push_back({parse_index_list(spec.substr(0, eq), o.n), io::read_matrix_file(spec.substr(eq + 1))});
    }
    Fcm f = fcm_assemble_blocks(o.n, blocks, o.theta);
    if (o.on.empty()) {
        report_matrix(ctx, f.adjacency, {{"inputs", {{"n", o.n}, {"blocks", o.blocks}}}});
        return;
    }
    const auto on = resolve_nodes(o.on, f.node_labels, f.size());
    const HiddenPattern hp = fcm_hidden_pattern(f, make_state(f.size(), on), o.max_steps);
    if (ctx.format == Format::text) {
        ctx.begin();
        print_matrix(ctx.out, f.adjacency);
        Ctx inner{ctx.out, ctx.format, false, ctx.command};
        report_fcm_run(inner, f, hp, {});
        return;
    }
    report_fcm_run(ctx, f, hp, {{"n", o.n}, {"blocks", o.blocks}, {"on", on}, {"matrix", to_json(f.adjacency)}});
}

// ---------------------------------------------------------------- frm

struct FrmOpts {
    std::vector<std::string> matrices;
    std::string on, start = "domain", alphas = "0.1", sd_mode = "abs";
    double theta = 1.0;
    double divisor = 1.0;
    std::size_t max_steps = kDefaultMaxSteps;
};

Frm load_frm(const std::string& path, double theta) {
    Matrix m = io::read_matrix_file(path);
    return Frm{m, m.row_labels(), m.col_labels(), theta};
}

void cmd_frm_run(const Ctx& ctx, const FrmOpts& o) {
    Frm f = load_frm(o.matrices.at(0), o.theta);
    Space start;
    if (o.start == "domain") {
        start = Space::domain;
    } else if (o.start == "range") {
        start = Space::range;
    } else {
        throw io::ParseError("--start must be domain or range");
    }
    const std::size_t n = start == Space::domain ? f.domain_size() : f.range_size();
    const auto on = resolve_nodes(o.on, start == Space::domain ? f.domain_labels : f.range_labels, n);
    const HiddenPatternPair hp = frm_hidden_pattern(f, make_state(n, on), start, o.max_steps);

    if (ctx.format == Format::json) {
        auto pairs_json = [](const std::vector<StatePair>& ps) {
            json a = json::array();
            for (const auto& p : ps) a.push_back({{"domain", to_json(p.first)}, {"range", to_json(p.second)}});
            return a;
        };
        emit_json(ctx, {{"inputs", {{"matrix", o.matrices.at(0)}, {"on", on}, {"start", o.start}, {"theta", o.theta}}},
                        {"pairs", pairs_json(hp.pairs)}, {"kind", to_string(hp.kind)},
                        {"terminal_pairs", pairs_json(hp.terminal_pairs)}, {"steps", hp.steps}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "step,domain,range\n";
        for (std::size_t t = 0; t < hp.pairs.size(); ++t)
            ctx.out << t << ",\"" << bits(hp.pairs[t].first) << "\",\"" << bits(hp.pairs[t].second) << "\"\n";
        return;
    }
    ctx.begin();
    for (std::size_t t = 0; t < hp.pairs.size(); ++t)
        ctx.out << "pair " << t << ": domain " << bits(hp.pairs[t].first) << " range " << bits(hp.pairs[t].second) << '\n';
    ctx.out << "hidden pattern: " << to_string(hp.kind) << '\n';
    for (const auto& p : hp.terminal_pairs) ctx.out << "  " << bits(p.first) << " | " << bits(p.second) << '\n';
}

void cmd_frm_combine(const Ctx& ctx, const FrmOpts& o) {
    std::vector<Frm> maps;
    for (const auto& p : o.matrices) maps.push_back(load_frm(p, o.theta));
    report_matrix(ctx, frm_combine(maps, o.theta).relation, {{"inputs", {{"matrices", o.matrices}}}});
}

void cmd_frm_fuzzify(const Ctx& ctx, const FrmOpts& o) {
    const Matrix avg = scale_divide(io::read_matrix_file(o.matrices.at(0)), o.divisor);
    const ColumnStats stats = column_stats(avg, parse_sd_mode(o.sd_mode));
    const Vector alphas = io::parse_number_list(o.alphas);
    const CombinedFuzzy c = frm_combined_fuzzy(avg, stats, alphas);
    const Labels rows = labels_or_default(avg.row_labels(), "R", avg.rows());
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c.row_sums[a] > c.row_sums[b]; });

    if (ctx.format == Format::json) {
        json ranking = json::array();
        for (auto i : order) ranking.push_back(rows[i]);
        emit_json(ctx, {{"inputs", {{"matrix", o.matrices.at(0)}, {"divisor", o.divisor}, {"alphas", alphas}, {"sd_mode", o.sd_mode}}},
                        {"average", to_json(avg)},
                        {"stats", {{"means", stats.means}, {"sds", stats.sds}}},
                        {"fuzzy", to_json(c.matrix)}, {"row_sums", c.row_sums}, {"grades", c.grades},
                        {"ranking", ranking}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "row,row_sum,grade\n";
        for (std::size_t i = 0; i < rows.size(); ++i) ctx.out << rows[i] << ',' << num(c.row_sums[i]) << ',' << num(c.grades[i]) << '\n';
        return;
    }
    ctx.begin();
    ctx.out << "column means: " << join(stats.means) << '\n';
    ctx.out << "column sds (" << o.sd_mode << "): " << join(stats.sds) << '\n';
    ctx.out << (alphas.size() == 1 ? "fuzzy matrix alpha=" + num(alphas[0]) : "combined fuzzy matrix") << '\n';
    print_matrix(ctx.out, c.matrix);
    ctx.out << "row sums: " << join(c.row_sums) << '\n';
    ctx.out << "grades: " << join(c.grades) << '\n';
    ctx.out << "ranking:";
    for (auto i : order) ctx.out << ' ' << rows[i];
    ctx.out << '\n';
}

// ---------------------------------------------------------------- bam

struct BamOpts {
    std::string matrix, second, initial, start = "x", u, v, i, j;
    double scale = 5.0, scale2 = 5.0;
    std::size_t max_steps = kDefaultMaxSteps;
};

void cmd_bam_run(const Ctx& ctx, const BamOpts& o) {
    BamModel m = make_bam(io::read_matrix_file(o.matrix), o.scale);
    if (!o.u.empty()) m.thresholds_u = io::parse_number_list(o.u);
    if (!o.v.empty()) m.thresholds_v = io::parse_number_list(o.v);
    if (!o.i.empty()) m.inputs_i = io::parse_number_list(o.i);
    if (!o.j.empty()) m.inputs_j = io::parse_number_list(o.j);
    if (o.start != "x" && o.start != "y") throw io::ParseError("--start must be x or y");
    const Side side = o.start == "x" ? Side::x : Side::y;
    const BamTrace tr = bam_run(m, io::parse_number_list(o.initial), side, o.max_steps);

    if (ctx.format == Format::json) {
        json pairs = json::array();
        for (const auto& p : tr.pairs) pairs.push_back({{"x", to_json(p.first)}, {"y", to_json(p.second)}});
        emit_json(ctx, {{"inputs", {{"matrix", o.matrix}, {"scale", o.scale}, {"start", o.start}}},
                        {"activations", tr.activations}, {"pairs", pairs}, {"kind", to_string(tr.kind)},
                        {"fixed_pair", {{"x", to_json(tr.fixed_pair.first)}, {"y", to_json(tr.fixed_pair.second)}}},
                        {"settle_step", tr.settle_step}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "step,activation\n";
        for (std::size_t t = 0; t < tr.activations.size(); ++t) ctx.out << t << ",\"" << join(tr.activations[t], ",") << "\"\n";
        return;
    }
    ctx.begin();
    const char* names[2] = {side == Side::x ? "X" : "Y", side == Side::x ? "Y" : "X"};
    for (std::size_t t = 0; t < tr.activations.size(); ++t)
        ctx.out << "K+" << t << " " << names[t % 2] << " = (" << join(tr.activations[t], ", ") << ")\n";
    ctx.out << "result: " << to_string(tr.kind) << " X " << bits(tr.fixed_pair.first) << " Y " << bits(tr.fixed_pair.second)
            << '\n';
    ctx.out << "settled at K+" << tr.settle_step << '\n';
}

void cmd_bam_indirect(const Ctx& ctx, const BamOpts& o) {
    const IndirectRelation r = bam_indirect(make_bam(io::read_matrix_file(o.matrix), o.scale),
                                            make_bam(io::read_matrix_file(o.second), o.scale2));
    if (ctx.format == Format::text) {
        ctx.begin();
        print_matrix(ctx.out, r.matrix);
        ctx.out << "scale: [" << num(-r.bound) << ", " << num(r.bound) << "]\n";
        return;
    }
    report_matrix(ctx, r.matrix, {{"bound", r.bound}});
}

// ---------------------------------------------------------------- fam

struct FamOpts {
    std::string matrix, backward, forward;
};

void cmd_fam_recall(const Ctx& ctx, const FamOpts& o) {
    if (o.backward.empty() == o.forward.empty()) throw io::ParseError("give exactly one of --backward or --forward");
    FamModel model{io::read_matrix_file(o.matrix)};
    const bool back = !o.backward.empty();
    const Vector in = io::parse_number_list(back ? o.backward : o.forward);
    const Vector res = back ? fam_backward(model, in) : fam_forward(model, in);
    const Labels labels = back ? labels_or_default(model.matrix.row_labels(), "W", model.matrix.rows())
                               : labels_or_default(model.matrix.col_labels(), "R", model.matrix.cols());
    const auto ranked = fam_rank(res, labels);

    if (ctx.format == Format::json) {
        json rank = json::array();
        for (const auto& [l, v] : ranked) rank.push_back({{"label", l}, {"value", v}});
        emit_json(ctx, {{"inputs", {{"matrix", o.matrix}, {"direction", back ? "backward" : "forward"}, {"fit", in}}},
                        {"result", res}, {"ranking", rank}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "label,value\n";
        for (const auto& [l, v] : ranked) ctx.out << l << ',' << num(v) << '\n';
        return;
    }
    ctx.begin();
    ctx.out << (back ? "backward" : "forward") << " recall: (" << join(res, ", ") << ")\n";
    ctx.out << "ranking:";
    for (const auto& [l, v] : ranked) ctx.out << ' ' << l << '=' << num(v);
    ctx.out << '\n';
}

// ---------------------------------------------------------------- fre

struct FreOpts {
    std::string p, q, r, composition = "max-min", first, count;
    std::vector<std::string> partitions;
    bool transpose_p = false;
    std::size_t chunk = 0;
    double q_scale = 1.0, r_scale = 1.0;
};

Matrix load_q_matrix(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return io::read_matrix_file(spec);
    return Matrix::column_vector(io::parse_number_list(spec));
}

void cmd_fre_solve(const Ctx& ctx, const FreOpts& o) {
    const Matrix q = load_q_matrix(o.q);
    const Vector r = io::load_vector(o.r);
    const bool necessary = fre_necessary_check(q, r);
    const FreSolution s = fre_max_solution(q, r);
    if (ctx.format == Format::json) {
        emit_json(ctx, {{"inputs", {{"q", o.q}, {"r", r}}}, {"necessary_condition", necessary}, {"p_hat", s.p_hat},
                        {"solvable", s.solvable}, {"residual", s.residual}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "index,p_hat\n";
        for (std::size_t j = 0; j < s.p_hat.size(); ++j) ctx.out << j + 1 << ',' << num(s.p_hat[j]) << '\n';
        return;
    }
    ctx.begin();
    ctx.out << "necessary condition: " << (necessary ? "holds" : "fails") << '\n';
    ctx.out << "p_hat: (" << join(s.p_hat, ", ") << ")\n";
    ctx.out << "solvable: " << (s.solvable ? "true" : "false") << '\n';
    ctx.out << "residual: " << num(s.residual) << '\n';
}

Composition parse_composition(const std::string& s) {
    if (s == "max-min") return Composition::max_min;
    if (s == "max-product") return Composition::max_product;
    throw io::ParseError("--composition must be max-min or max-product");
}

void cmd_fre_verify(const Ctx& ctx, const FreOpts& o) {
    Matrix p = io::read_matrix_file(o.p);
    if (o.transpose_p) p = transpose(p);
    const Matrix q = load_q_matrix(o.q);
    const Matrix r = load_q_matrix(o.r);
    const Composition c = parse_composition(o.composition);
    const double res = fre_verify(p, q, r, c);
    const Matrix got = c == Composition::max_min ? compose_max_min(p, q) : compose_max_product(p, q);
    if (ctx.format == Format::json) {
        emit_json(ctx, {{"inputs", {{"p", o.p}, {"q", o.q}, {"r", o.r}, {"composition", o.composition}}},
                        {"composed", to_json(got)}, {"residual", res}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << io::serialize_matrix_csv(got);
        return;
    }
    ctx.begin();
    ctx.out << "composition\n";
    print_matrix(ctx.out, got);
    ctx.out << "residual: " << num(res) << '\n';
}

Vector scaled(Vector v, double s) {
    for (double& x : v) x *= s;
    return v;
}

void cmd_fre_fit(const Ctx& ctx, const FreOpts& o) {
    const Vector q = scaled(io::load_vector(o.q), o.q_scale);
    const Vector r = scaled(io::load_vector(o.r), o.r_scale);
    const Matrix p = fre_fit_max_product(q, r);
    const double res = fre_verify(p, Matrix::column_vector(q), Matrix::column_vector(r), Composition::max_product);
    if (ctx.format == Format::text) {
        ctx.begin();
        print_matrix(ctx.out, p);
        ctx.out << "residual: " << num(res) << '\n';
        return;
    }
    report_matrix(ctx, p, {{"residual", res}});
}

void cmd_fre_peaks(const Ctx& ctx, const FreOpts& o) {
    const Vector q = scaled(io::load_vector(o.q), o.q_scale);
    const Vector r = scaled(io::load_vector(o.r), o.r_scale);
    std::vector<std::vector<std::size_t>> parts;
    if (!o.partitions.empty()) {
        if (o.chunk) throw io::ParseError("give either --chunk or --partition, not both");
        for (const auto& s : o.partitions) parts.push_back(parse_index_list(s, q.size()));
    } else {
        if (!o.chunk) throw io::ParseError("give --chunk or --partition");
        const std::size_t first = o.first.empty() ? 0 : parse_index_list(o.first, q.size()).at(0);
        std::size_t count = q.size() - first;
        if (!o.count.empty()) count = static_cast<std::size_t>(io::parse_number_list(o.count).at(0));
        parts = equal_chunks(first, count, o.chunk);
    }
    const auto peaks = fre_partition_peaks(q, r, parts);
    if (ctx.format == Format::json) {
        json a = json::array();
        for (const auto& pk : peaks) {
            std::vector<std::size_t> one_based;
            for (auto i : pk.indices) one_based.push_back(i + 1);
            a.push_back({{"indices", one_based}, {"p", to_json(pk.p)}, {"peak_index", pk.peak_index + 1},
                         {"peak_q", q[pk.peak_index]}, {"peak_value", pk.peak_value}});
        }
        emit_json(ctx, {{"inputs", {{"q", q}, {"r", r}}}, {"partitions", a}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "partition,peak_index,peak_q,peak_r\n";
        for (std::size_t k = 0; k < peaks.size(); ++k)
            ctx.out << k + 1 << ',' << peaks[k].peak_index + 1 << ',' << num(q[peaks[k].peak_index]) << ','
                    << num(peaks[k].peak_value) << '\n';
        return;
    }
    ctx.begin();
    for (std::size_t k = 0; k < peaks.size(); ++k) {
        const auto& pk = peaks[k];
        ctx.out << "partition " << k + 1 << " [" << pk.indices.front() + 1 << ".." << pk.indices.back() + 1
                << "]: peak at element " << pk.peak_index + 1 << " (q=" << num(q[pk.peak_index])
                << ", r=" << num(pk.peak_value) << ")\n";
    }
}

// ---------------------------------------------------------------- rel

struct RelOpts {
    std::string matrix;
    double alpha = 0.5;
    double epsilon = 1.0;
};

void cmd_rel_summary(const Ctx& ctx, const RelOpts& o) {
    const Matrix r = io::read_matrix_file(o.matrix);
    const RelationSummary s = relation_summary(r);
    if (ctx.format == Format::json) {
        emit_json(ctx, {{"inputs", {{"matrix", o.matrix}}}, {"dom", s.dom}, {"ran", s.ran}, {"height", s.height}});
        return;
    }
    if (ctx.format == Format::series) {
        ctx.out << "kind,index,value\n";
        for (std::size_t i = 0; i < s.dom.size(); ++i) ctx.out << "dom," << i + 1 << ',' << num(s.dom[i]) << '\n';
        for (std::size_t j = 0; j < s.ran.size(); ++j) ctx.out << "ran," << j + 1 << ',' << num(s.ran[j]) << '\n';
        return;
    }
    ctx.begin();
    ctx.out << "dom: " << join(s.dom) << '\n' << "ran: " << join(s.ran) << '\n' << "height: " << num(s.height) << '\n';
}

void cmd_rel_cut(const Ctx& ctx, const RelOpts& o) {
    report_matrix(ctx, alpha_cut(io::read_matrix_file(o.matrix), o.alpha), {{"inputs", {{"alpha", o.alpha}}}});
}

void cmd_rel_props(const Ctx& ctx, const RelOpts& o) {
    const RelationFlags f = relation_properties(io::read_matrix_file(o.matrix), o.epsilon);
    const std::vector<std::pair<const char*, bool>> rows = {
        {"reflexive", f.reflexive},   {"anti_reflexive", f.anti_reflexive}, {"symmetric", f.symmetric},
        {"max_min_transitive", f.max_min_transitive}, {"compatibility", f.compatibility}, {"similarity", f.similarity}};
    if (ctx.format == Format::json) {
        json j;
        for (const auto& [k, v] : rows) j[k] = v;
        emit_json(ctx, {{"inputs", {{"matrix", o.matrix}, {"epsilon", o.epsilon}}}, {"flags", j}});
        return;
    }
    if (ctx.format == Format::series) ctx.out << "property,value\n";
    else ctx.begin();
    for (const auto& [k, v] : rows) ctx.out << k << (ctx.format == Format::series ? "," : ": ") << (v ? "true" : "false") << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy matrix models: CETD, FCM, FRM, BAM, FAM and relational equations", "fuzzy"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    bool no_header = false;
    app.add_option("--format", format, "text, json or series-csv")->check(CLI::IsMember({"text", "json", "series-csv"}));
    app.add_flag("--no-header", no_header, "omit the header line in text output");

    std::string command;
    std::function<void(const Ctx&)> action;
    auto bind = [&](CLI::App* sub, std::string name, std::function<void(const Ctx&)> fn) {
        sub->callback([&, name, fn] {
            command = name;
            action = fn;
        });
    };

    CetdOpts cetd_o;
    auto* cetd_cmd = app.add_subcommand("cetd", "ATD, RTD and CETD matrices from raw counts");
    cetd_cmd->add_option("--raw", cetd_o.raw, "raw counts CSV")->required();
    cetd_cmd->add_option("--intervals", cetd_o.intervals, "interval lengths; default: first CSV column");
    cetd_cmd->add_option("--alphas", cetd_o.alphas, "comma list of alpha values")->capture_default_str();
    cetd_cmd->add_option("--sd-mode", cetd_o.sd_mode, "sample or abs")->capture_default_str();
    bind(cetd_cmd, "cetd", [&](const Ctx& c) { cmd_cetd(c, cetd_o); });

    FcmOpts fcm_o;
    auto* fcm = app.add_subcommand("fcm", "fuzzy cognitive maps");
    fcm->require_subcommand(1);
    auto* fcm_run = fcm->add_subcommand("run", "hidden pattern from an initial state");
    fcm_run->add_option("--matrix", fcm_o.matrices, "adjacency CSV")->required()->expected(1);
    fcm_run->add_option("--on", fcm_o.on, "nodes switched on (1-based or labels)")->required();
    fcm_run->add_option("--theta", fcm_o.theta, "threshold")->capture_default_str();
    fcm_run->add_option("--max-steps", fcm_o.max_steps, "iteration guard")->capture_default_str();
    bind(fcm_run, "fcm run", [&](const Ctx& c) { cmd_fcm_run(c, fcm_o); });
    auto* fcm_comb = fcm->add_subcommand("combine", "sum of adjacency matrices");
    fcm_comb->add_option("--matrix", fcm_o.matrices, "adjacency CSV (repeat)")->required();
    fcm_comb->add_option("--theta", fcm_o.theta, "threshold")->capture_default_str();
    bind(fcm_comb, "fcm combine", [&](const Ctx& c) { cmd_fcm_combine(c, fcm_o); });
    auto* fcm_blocks = fcm->add_subcommand("blocks", "assemble block connection matrices");
    fcm_blocks->add_option("--n", fcm_o.n, "node count")->required();
    fcm_blocks->add_option("--block", fcm_o.blocks, "INDICES=FILE, indices 1-based (repeat)")->required();
    fcm_blocks->add_option("--on", fcm_o.on, "optionally run from these nodes");
    fcm_blocks->add_option("--theta", fcm_o.theta, "threshold")->capture_default_str();
    bind(fcm_blocks, "fcm blocks", [&](const Ctx& c) { cmd_fcm_blocks(c, fcm_o); });

    FrmOpts frm_o;
    auto* frm = app.add_subcommand("frm", "fuzzy relational maps");
    frm->require_subcommand(1);
    auto* frm_run = frm->add_subcommand("run", "hidden pattern pair");
    frm_run->add_option("--matrix", frm_o.matrices, "relational CSV")->required()->expected(1);
    frm_run->add_option("--on", frm_o.on, "nodes switched on")->required();
    frm_run->add_option("--start", frm_o.start, "domain or range")->capture_default_str();
    frm_run->add_option("--theta", frm_o.theta, "threshold")->capture_default_str();
    frm_run->add_option("--max-steps", frm_o.max_steps, "iteration guard")->capture_default_str();
    bind(frm_run, "frm run", [&](const Ctx& c) { cmd_frm_run(c, frm_o); });
    auto* frm_comb = frm->add_subcommand("combine", "sum of relational matrices");
    frm_comb->add_option("--matrix", frm_o.matrices, "relational CSV (repeat)")->required();
    bind(frm_comb, "frm combine", [&](const Ctx& c) { cmd_frm_combine(c, frm_o); });
    auto* frm_fz = frm->add_subcommand("fuzzify", "alpha-graded fuzzy matrix, row sums and grades");
    frm_fz->add_option("--matrix", frm_o.matrices, "data CSV")->required()->expected(1);
    frm_fz->add_option("--divisor", frm_o.divisor, "divide entries before grading")->capture_default_str();
    frm_fz->add_option("--alphas", frm_o.alphas, "one alpha, or a list to combine")->capture_default_str();
    frm_fz->add_option("--sd-mode", frm_o.sd_mode, "sample or abs")->capture_default_str();
    bind(frm_fz, "frm fuzzify", [&](const Ctx& c) { cmd_frm_fuzzify(c, frm_o); });

    BamOpts bam_o;
    auto* bam = app.add_subcommand("bam", "bidirectional associative memories");
    bam->require_subcommand(1);
    auto* bam_r = bam->add_subcommand("run", "synchronous run to a fixed pair");
    bam_r->add_option("--matrix", bam_o.matrix, "synaptic CSV")->required();
    bam_r->add_option("--initial", bam_o.initial, "initial activation")->required();
    bam_r->add_option("--scale", bam_o.scale, "entries lie in [-scale, scale]")->capture_default_str();
    bam_r->add_option("--start", bam_o.start, "x or y")->capture_default_str();
    bam_r->add_option("--thresholds-u", bam_o.u, "F_X thresholds");
    bam_r->add_option("--thresholds-v", bam_o.v, "F_Y thresholds");
    bam_r->add_option("--inputs-i", bam_o.i, "F_X external inputs");
    bam_r->add_option("--inputs-j", bam_o.j, "F_Y external inputs");
    bam_r->add_option("--max-steps", bam_o.max_steps, "iteration guard")->capture_default_str();
    bind(bam_r, "bam run", [&](const Ctx& c) { cmd_bam_run(c, bam_o); });
    auto* bam_ind = bam->add_subcommand("indirect", "(M1 x M2) transposed");
    bam_ind->add_option("--first", bam_o.matrix, "first synaptic CSV")->required();
    bam_ind->add_option("--second", bam_o.second, "second synaptic CSV")->required();
    bam_ind->add_option("--scale1", bam_o.scale, "scale of the first")->capture_default_str();
    bam_ind->add_option("--scale2", bam_o.scale2, "scale of the second")->capture_default_str();
    bind(bam_ind, "bam indirect", [&](const Ctx& c) { cmd_bam_indirect(c, bam_o); });

    FamOpts fam_o;
    auto* fam = app.add_subcommand("fam", "fuzzy associative memories");
    fam->require_subcommand(1);
    auto* fam_rec = fam->add_subcommand("recall", "max-min recall");
    fam_rec->add_option("--matrix", fam_o.matrix, "FAM CSV")->required();
    fam_rec->add_option("--backward", fam_o.backward, "fit vector over columns");
    fam_rec->add_option("--forward", fam_o.forward, "fit vector over rows");
    bind(fam_rec, "fam recall", [&](const Ctx& c) { cmd_fam_recall(c, fam_o); });

    FreOpts fre_o;
    auto* fre = app.add_subcommand("fre", "fuzzy relational equations");
    fre->require_subcommand(1);
    auto* fre_s = fre->add_subcommand("solve", "maximal solution of p o Q = r");
    fre_s->add_option("--q", fre_o.q, "Q CSV")->required();
    fre_s->add_option("--r", fre_o.r, "r as list or CSV")->required();
    bind(fre_s, "fre solve", [&](const Ctx& c) { cmd_fre_solve(c, fre_o); });
    auto* fre_v = fre->add_subcommand("verify", "residual of P o Q = R");
    fre_v->add_option("--p", fre_o.p, "P CSV")->required();
    fre_v->add_option("--q", fre_o.q, "Q CSV or list")->required();
    fre_v->add_option("--r", fre_o.r, "R CSV or list")->required();
    fre_v->add_option("--composition", fre_o.composition, "max-min or max-product")->capture_default_str();
    fre_v->add_flag("--transpose-p", fre_o.transpose_p, "use P transposed");
    bind(fre_v, "fre verify", [&](const Ctx& c) { cmd_fre_verify(c, fre_o); });
    auto* fre_f = fre->add_subcommand("fit", "closed-form max-product fit");
    fre_f->add_option("--q", fre_o.q, "inputs")->required();
    fre_f->add_option("--r", fre_o.r, "expected outputs")->required();
    fre_f->add_option("--q-scale", fre_o.q_scale, "multiply inputs")->capture_default_str();
    fre_f->add_option("--r-scale", fre_o.r_scale, "multiply outputs")->capture_default_str();
    bind(fre_f, "fre fit", [&](const Ctx& c) { cmd_fre_fit(c, fre_o); });
    auto* fre_p = fre->add_subcommand("peaks", "partitioned fit and peak per partition");
    fre_p->add_option("--q", fre_o.q, "inputs")->required();
    fre_p->add_option("--r", fre_o.r, "outputs")->required();
    fre_p->add_option("--q-scale", fre_o.q_scale, "multiply inputs")->capture_default_str();
    fre_p->add_option("--r-scale", fre_o.r_scale, "multiply outputs")->capture_default_str();
    fre_p->add_option("--chunk", fre_o.chunk, "elements per partition");
    fre_p->add_option("--first", fre_o.first, "first element (1-based) for --chunk");
    fre_p->add_option("--count", fre_o.count, "elements covered by --chunk");
    fre_p->add_option("--partition", fre_o.partitions, "explicit 1-based index list (repeat)");
    bind(fre_p, "fre peaks", [&](const Ctx& c) { cmd_fre_peaks(c, fre_o); });

    RelOpts rel_o;
    auto* rel = app.add_subcommand("rel", "binary fuzzy relations");
    rel->require_subcommand(1);
    auto* rel_s = rel->add_subcommand("summary", "domain, range and height");
    rel_s->add_option("--matrix", rel_o.matrix, "relation CSV")->required();
    bind(rel_s, "rel summary", [&](const Ctx& c) { cmd_rel_summary(c, rel_o); });
    auto* rel_c = rel->add_subcommand("cut", "alpha-cut");
    rel_c->add_option("--matrix", rel_o.matrix, "relation CSV")->required();
    rel_c->add_option("--alpha", rel_o.alpha, "cut level in (0, 1]")->required();
    bind(rel_c, "rel cut", [&](const Ctx& c) { cmd_rel_cut(c, rel_o); });
    auto* rel_p = rel->add_subcommand("props", "reflexive, symmetric, transitive checks");
    rel_p->add_option("--matrix", rel_o.matrix, "relation CSV")->required();
    rel_p->add_option("--epsilon", rel_o.epsilon, "reflexivity level")->capture_default_str();
    bind(rel_p, "rel props", [&](const Ctx& c) { cmd_rel_props(c, rel_o); });

    std::vector<std::string> storage{"fuzzy"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        return 2;
    }
    if (!action) {
        err << app.help();
        return 2;
    }
    const Format fmt = format == "json" ? Format::json : (format == "series-csv" ? Format::series : Format::text);
    try {
        action(Ctx{out, fmt, !no_header, command});
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace fuzzy::cli
