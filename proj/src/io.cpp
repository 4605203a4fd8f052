#include "elimdual/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elimdual {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '.';
}

// Cursor over one line; columns are 1-based for error messages.
class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line, std::size_t offset)
        : text_(text), line_(line), offset_(offset) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[nodiscard]] bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    [[nodiscard]] char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }
    [[nodiscard]] std::size_t column() const { return offset_ + pos_ + 1; }
    [[noreturn]] void error(const std::string& message) const { fail(line_, column(), message); }

    std::string identifier() {
        skip_space();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) error("expected a variable name");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // Unsigned integer or p/q.
    Rational number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) error("expected a number");
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t den = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == den) error("expected a denominator");
        }
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::kDivisionByZero) {
                throw Error(ErrorCode::kDivisionByZero, "line " + std::to_string(line_) + ", column " +
                                                            std::to_string(offset_ + start + 1) +
                                                            ": zero denominator");
            }
            throw;
        }
    }

    [[nodiscard]] bool next_is_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    [[nodiscard]] bool next_is_ident() {
        skip_space();
        return pos_ < text_.size() && is_ident_start(text_[pos_]);
    }

    std::string_view rest() const { return text_.substr(pos_); }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

VarIndex lookup(LineScanner& sc, const System& system, const std::string& name) {
    const auto v = system.find_variable(name);
    if (!v) sc.error("unknown variable '" + name + "'");
    return *v;
}

// expr := ["+"|"-"] term (("+"|"-") term)*   term := [num "*"] var | num var | "0" | "[0]"
LinearExpr parse_expr_at(LineScanner& sc, const System& system) {
    LinearExpr expr;
    if (sc.consume('[')) {
        if (!sc.consume('0') || !sc.consume(']')) sc.error("expected [0]");
        return expr;
    }
    bool first = true;
    for (;;) {
        Rational sign(1);
        if (sc.consume('-')) {
            sign = Rational(-1);
        } else if (!sc.consume('+') && !first) {
            break;
        }
        first = false;
        Rational coeff(1);
        bool has_number = false;
        if (sc.next_is_digit()) {
            coeff = sc.number();
            has_number = true;
            sc.consume('*');
        }
        if (sc.next_is_ident()) {
            const std::string name = sc.identifier();
            expr.add_term(lookup(sc, system, name), sign * coeff);
        } else if (!(has_number && coeff.is_zero())) {
            sc.error("expected a variable name");
        }
        const char next = sc.peek();
        if (next != '+' && next != '-') break;
    }
    return expr;
}

struct RelToken {
    std::string_view text;
    Relation rel;
    bool flip;
};

constexpr RelToken kRelations[] = {
    {"<=", Relation::kLe, false}, {">=", Relation::kLe, true}, {"<", Relation::kLt, false},
    {">", Relation::kLt, true},   {"=", Relation::kEq, false},
};

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string term_text(const Rational& c, const std::string& name, bool leading) {
    std::string out;
    const Rational mag = c.abs();
    if (c.sign() < 0) {
        out = leading ? "-" : " - ";
    } else if (!leading) {
        out = " + ";
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    return out + name;
}

}  // namespace

LinearExpr parse_expr(std::string_view text, const System& system) {
    LineScanner sc(text, 1, 0);
    LinearExpr e = parse_expr_at(sc, system);
    if (!sc.at_end()) sc.error("unexpected '" + std::string(1, sc.peek()) + "'");
    return e;
}

System parse_system(std::string_view text) {
    System system;
    bool have_vars = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) continue;

        LineScanner sc(raw, line_no, 0);
        // Directive: identifier followed by ':' (or the bare word "cone").
        if (sc.next_is_ident()) {
            const std::string_view rest = raw;
            const auto colon = rest.find(':');
            const std::string head = trim(rest.substr(0, colon));
            const bool directive_shape =
                colon != std::string_view::npos &&
                std::all_of(head.begin(), head.end(), [](char ch) { return is_ident_char(ch); });
            if (trim(raw) == "cone") {
                system.set_cone(true);
                continue;
            }
            if (directive_shape) {
                LineScanner args(raw.substr(colon + 1), line_no, colon + 1);
                if (head == "vars") {
                    if (have_vars) fail(line_no, 1, "duplicate vars: line");
                    while (!args.at_end()) {
                        const std::string name = args.identifier();
                        if (system.find_variable(name)) args.error("duplicate variable '" + name + "'");
                        system.add_variable(name);
                    }
                    have_vars = true;
                    continue;
                }
                if (!have_vars) fail(line_no, 1, "the vars: line must come first");
                if (head == "maximize") {
                    system.set_objective(parse_expr_at(args, system));
                    if (!args.at_end()) args.error("unexpected trailing text");
                    continue;
                }
                if (head == "nonneg") {
                    if (trim(raw.substr(colon + 1)) == "all") {
                        for (VarIndex v = 0; v < system.num_variables(); ++v) system.add_sign(v);
                        continue;
                    }
                    while (!args.at_end()) system.add_sign(lookup(args, system, args.identifier()));
                    continue;
                }
                fail(line_no, 1, "unknown directive '" + head + "'");
            }
        }
        if (!have_vars) fail(line_no, 1, "the vars: line must come first");

        LinearExpr expr = parse_expr_at(sc, system);
        sc.skip_space();
        const RelToken* rel = nullptr;
        for (const auto& r : kRelations) {
            if (sc.rest().substr(0, r.text.size()) == r.text) {
                rel = &r;
                break;
            }
        }
        if (rel == nullptr) sc.error("expected one of <=, >=, =, <, >");
        sc.advance(rel->text.size());
        Rational rhs_sign(1);
        if (sc.consume('-')) {
            rhs_sign = Rational(-1);
        } else {
            sc.consume('+');
        }
        Rational rhs = rhs_sign * sc.number();
        if (!sc.at_end()) sc.error("unexpected trailing text");
        if (rel->flip) {
            expr = -expr;
            rhs = -rhs;
        }
        system.add(std::move(expr), rel->rel, std::move(rhs));
    }
    if (!have_vars) fail(line_no, 1, "missing vars: line");
    return system;
}

std::string format_expr(const LinearExpr& expr, const System& system) {
    if (expr.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [v, c] : expr.terms()) {
        out += term_text(c, system.variable_name(v), leading);
        leading = false;
    }
    return out;
}

std::string format_constraint(const Constraint& c, const System& system, PrintOptions options) {
    if (options.ge_orientation && c.rel != Relation::kEq) {
        return format_expr(-c.expr, system) + (c.rel == Relation::kLt ? " > " : " >= ") + (-c.rhs).str();
    }
    return format_expr(c.expr, system) + " " + to_string(c.rel) + " " + c.rhs.str();
}

std::string print_system(const System& system, PrintOptions options) {
    std::ostringstream os;
    os << "vars:";
    for (const auto& name : system.variables()) os << ' ' << name;
    os << '\n';
    if (system.objective()) os << "maximize: " << format_expr(*system.objective(), system) << '\n';
    if (system.is_cone()) os << "cone\n";
    std::vector<bool> signed_var(system.num_variables(), false);
    for (const auto& c : system.constraints()) {
        if (c.provenance.kind == ProvenanceKind::kSign && c.sign_shape_var()) {
            signed_var[*c.sign_shape_var()] = true;
            continue;
        }
        os << format_constraint(c, system, options) << '\n';
    }
    if (std::any_of(signed_var.begin(), signed_var.end(), [](bool b) { return b; })) {
        os << "nonneg:";
        if (std::all_of(signed_var.begin(), signed_var.end(), [](bool b) { return b; })) {
            os << " all";
        } else {
            for (VarIndex v = 0; v < signed_var.size(); ++v) {
                if (signed_var[v]) os << ' ' << system.variable_name(v);
            }
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------- JSON

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Constraint& c, const System& system) {
    Json terms = Json::object();
    for (const auto& [v, coeff] : c.expr.terms()) terms[system.variable_name(v)] = coeff.str();
    Json parents = Json::array();
    for (ConstraintId p : c.provenance.parents) parents.push_back(id_value(p));
    return Json{{"id", id_value(c.id)},
                {"label", c.label},
                {"text", format_constraint(c, system)},
                {"terms", std::move(terms)},
                {"relation", to_string(c.rel)},
                {"rhs", c.rhs.str()},
                {"provenance", to_string(c.provenance.kind)},
                {"parents", std::move(parents)}};
}

Json to_json(const System& system) {
    Json rows = Json::array();
    for (const auto& c : system.constraints()) rows.push_back(to_json(c, system));
    return Json{{"variables", system.variables()}, {"cone", system.is_cone()}, {"constraints", std::move(rows)}};
}

Json to_json(const MultiplierVector& lambda, const System& system) {
    Json out = Json::array();
    for (const auto& [id, w] : lambda.entries()) {
        const Constraint* c = system.find(id);
        out.push_back(Json{{"id", id_value(id)},
                           {"label", c != nullptr ? c->label : ""},
                           {"constraint", c != nullptr ? format_constraint(*c, system) : ""},
                           {"weight", w.str()}});
    }
    return out;
}

Json to_json(const Point& point, const System& system) {
    Json out = Json::object();
    for (const auto& [v, value] : point.values()) out[system.variable_name(v)] = value.str();
    return out;
}

Json to_json(const Interval& interval) {
    return Json{{"empty", interval.empty},
                {"lo", interval.lo ? Json(interval.lo->str()) : Json(nullptr)},
                {"lo_open", interval.lo_open},
                {"hi", interval.hi ? Json(interval.hi->str()) : Json(nullptr)},
                {"hi_open", interval.hi_open},
                {"text", interval.str()}};
}

Json to_json(const FeasibilityVerdict& verdict, const System& system) {
    if (const auto* f = std::get_if<Feasible>(&verdict)) {
        return Json{{"feasible", true}, {"witness", to_json(f->witness, system)}};
    }
    const auto& inf = std::get<Infeasible>(verdict);
    const Constraint row = combine(system, inf.certificate);
    return Json{{"feasible", false},
                {"certificate", to_json(inf.certificate, system)},
                {"combination", format_constraint(row, system)}};
}

Json to_json(const PipelineTrace& trace, bool include_systems) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json step{{"variable", s.variable_name},
                  {"pivot", s.pivot ? Json(id_value(*s.pivot)) : Json(nullptr)},
                  {"pivot_label", s.pivot_label},
                  {"kind", to_string(s.kind)}};
        if (include_systems) step["system"] = print_system(s.result, {.ge_orientation = true});
        steps.push_back(std::move(step));
    }
    std::vector<ExploreMove> moves;
    for (const auto& s : trace.steps) moves.push_back({s.variable_name, s.pivot_label});
    Json out{{"input_was_cone", trace.seed.input_was_cone},
             {"cone", print_system(trace.seed.cone)},
             {"working", print_system(trace.seed.working, {.ge_orientation = true})},
             {"sequence", format_sequence(moves)},
             {"steps", std::move(steps)},
             {"terminal", print_system(trace.terminal, {.ge_orientation = true})},
             {"interval", to_json(trace.interval)},
             {"verdict", to_string(trace.verdict)}};
    return out;
}

Json to_json(const ExploreReport& report) {
    Json outcomes = Json::array();
    for (const auto& o : report.outcomes) {
        outcomes.push_back(Json{{"sequence", format_sequence(o.sequence)},
                                {"interval", to_json(o.interval)},
                                {"verdict", to_string(o.verdict)}});
    }
    return Json{{"outcomes", std::move(outcomes)},
                {"pivot_sensitive", report.pivot_sensitive},
                {"states", report.states}};
}

}  // namespace elimdual
