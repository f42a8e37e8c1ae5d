#include "json_io.hpp"

#include <cctype>
#include <charconv>

namespace rotconj {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::string shortest_repr(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Rational number_to_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) {
        double d = j.get<double>();
        if (!std::isfinite(d)) throw ValidationError("parse", "non-finite number");
        return rational_from_decimal(shortest_repr(d));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ValidationError("parse", "expected a number or fraction string, got " + j.dump());
}

AngleValue plain_number(const std::string& text, const AngleParseOptions& opts) {
    if (opts.numeric && text.find('/') == std::string::npos) {
        Rational r = rational_from_decimal(text);
        return AngleValue::recognize(r.get_d());
    }
    return AngleValue(parse_rational(text));
}

double real_of(const json& j) {
    if (!j.is_number()) throw ValidationError("parse", "expected a real number, got " + j.dump());
    return j.get<double>();
}

Complex complex_of(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {real_of(j[0]), real_of(j[1])};
    throw ValidationError("parse", "expected a complex number [re, im], got " + j.dump());
}

Quat quat_of(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ValidationError("parse", "quaternion must be an array [a,b,c,d]");
    return {real_of(j[0]), real_of(j[1]), real_of(j[2]), real_of(j[3])};
}

Mat2 mat2_of(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2)
        throw ValidationError("parse", "U(2) matrix must be a 2x2 array of [re, im] entries");
    return {complex_of(j[0][0]), complex_of(j[0][1]), complex_of(j[1][0]), complex_of(j[1][1])};
}

Mat3 mat3_of(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ValidationError("parse", "rotation must be a 3x3 array");
    Mat3 m{};
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3) throw ValidationError("parse", "rotation must be a 3x3 array");
        for (int k = 0; k < 3; ++k) m[3 * i + k] = real_of(j[i][k]);
    }
    return m;
}

double no_negative_zero(double x) { return x + 0.0; }

json complex_json(Complex z) { return json::array({no_negative_zero(z.real()), no_negative_zero(z.imag())}); }

}  // namespace

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("parse", "malformed JSON in " + what + ": " + e.what());
    }
}

json to_json(const AngleValue& a) {
    if (a.is_opaque()) return json{{"numeric", a.opaque_value()}};
    json coeffs = json::object();
    for (const auto& [k, c] : a.coeffs()) coeffs[k] = format_rational(c);
    return json{{"rational", format_rational(a.rational())}, {"coeffs", coeffs}};
}

json to_json(const RotationVector& rho) {
    json arr = json::array();
    for (const auto& a : rho.angles) arr.push_back(to_json(a));
    return arr;
}

json to_json(const IrrationalBasis& basis) {
    json numeric = json::object();
    for (const auto& [k, v] : basis.numeric()) numeric[k] = v;
    return json{{"symbols", basis.symbols()}, {"numeric", numeric}};
}

json to_json(const GroupElement& g) {
    json j{{"group", group_name(g.group())}};
    auto quat = [](const Quat& q) {
        return json::array({no_negative_zero(q.w), no_negative_zero(q.x), no_negative_zero(q.y),
                            no_negative_zero(q.z)});
    };
    auto mat3 = [](const Mat3& m) {
        json rows = json::array();
        for (int r = 0; r < 3; ++r)
            rows.push_back(json::array(
                {no_negative_zero(m[3 * r]), no_negative_zero(m[3 * r + 1]), no_negative_zero(m[3 * r + 2])}));
        return rows;
    };
    switch (g.group()) {
        case GroupId::SU2: j["q"] = quat(g.quat()); break;
        case GroupId::U2: {
            const Mat2& m = g.mat2();
            j["matrix"] = json::array({json::array({complex_json(m[0]), complex_json(m[1])}),
                                       json::array({complex_json(m[2]), complex_json(m[3])})});
            break;
        }
        case GroupId::SO3: j["matrix"] = mat3(g.mat3()); break;
        case GroupId::SO3xS1:
            j["matrix"] = mat3(g.mat3());
            j["lambda"] = complex_json(g.phase());
            break;
        case GroupId::SpinC3:
        case GroupId::SU2xS1:
            j["q"] = quat(g.quat());
            j["lambda"] = complex_json(g.phase());
            break;
    }
    return j;
}

json to_json(const LatticeSolution& s) { return json{{"sign", s.sign}, {"n", s.n}, {"n_prime", s.n_prime}}; }

json to_json(const Verdict& v) {
    json j{{"status", status_name(v.status)}, {"certificate", v.certificate}};
    j["solution"] = v.solution ? to_json(*v.solution) : json(nullptr);
    if (v.phi_sign != 0) j["phi_sign"] = v.phi_sign;
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.matrix) {
        const auto& m = *v.matrix;
        j["matrix"] = json::array({json::array({m[0], m[1]}), json::array({m[2], m[3]})});
    }
    return j;
}

json to_json(const Witness& w) {
    json j{{"group", group_name(w.group)}, {"kind", witness_kind_name(w.kind)}};
    if (w.case_tag) j["case"] = w.case_tag;
    if (w.kind != WitnessKind::Identity) {
        j["theta_sign"] = w.theta_sign;
        if (group_arity(w.group) == 2) {
            j["phi_sign"] = w.phi_sign;
            j["twist"] = w.twist;
        }
    }
    if (w.conjugator) j["conjugator"] = to_json(*w.conjugator);
    if (w.covering) j["covering"] = w.covering->name();
    if (w.upstairs) j["upstairs"] = to_json(*w.upstairs);
    return j;
}

json to_json(const OrbitClosure& c) {
    json j{{"kind", closure_kind_name(c.kind)}, {"count", c.count}, {"components", c.components()}};
    j["relation"] = c.relation ? json::array({(*c.relation)[0], (*c.relation)[1], (*c.relation)[2]}) : json(nullptr);
    return j;
}

AngleValue angle_from_text(const std::string& raw, const AngleParseOptions& opts) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ValidationError("parse", "empty angle expression");
    if (s.front() == '{' || s.front() == '[') return angle_from_json(parse_json_text(s, "angle"), opts);

    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool exponent_sign = i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E') && i > 1 &&
                             (std::isdigit(static_cast<unsigned char>(s[i - 2])) || s[i - 2] == '.');
        if ((c == '+' || c == '-') && !exponent_sign) {
            if (!cur.empty()) terms.emplace_back(sign, cur);
            else if (i > 0) throw ValidationError("parse", "malformed angle expression '" + raw + "'");
            cur.clear();
            sign = c == '-' ? -1 : 1;
            continue;
        }
        cur += c;
    }
    if (cur.empty()) throw ValidationError("parse", "malformed angle expression '" + raw + "'");
    terms.emplace_back(sign, cur);

    AngleValue acc;
    for (const auto& [sg, term] : terms) {
        AngleValue value;
        auto star = term.find('*');
        if (star != std::string::npos) {
            std::string a = term.substr(0, star), b = term.substr(star + 1);
            if (is_identifier(b) && !is_identifier(a))
                value = AngleValue::symbol(b, parse_rational(a));
            else if (is_identifier(a) && !is_identifier(b))
                value = AngleValue::symbol(a, parse_rational(b));
            else
                throw ValidationError("parse", "malformed term '" + term + "' in angle expression");
        } else if (std::isalpha(static_cast<unsigned char>(term[0])) || term[0] == '_') {
            auto slash = term.find('/');
            std::string name = term.substr(0, slash);
            if (!is_identifier(name)) throw ValidationError("parse", "malformed symbol '" + term + "'");
            Rational coeff(1);
            if (slash != std::string::npos) coeff = Rational(1) / parse_rational(term.substr(slash + 1));
            value = AngleValue::symbol(name, coeff);
        } else {
            value = plain_number(term, opts);
        }
        acc = acc + (sg < 0 ? angle_neg(value) : value);
    }
    return acc;
}

AngleValue angle_from_json(const json& j, const AngleParseOptions& opts) {
    if (j.is_number()) {
        if (opts.numeric) return AngleValue::recognize(j.get<double>());
        return AngleValue(number_to_rational(j));
    }
    if (j.is_string()) return angle_from_text(j.get<std::string>(), opts);
    if (!j.is_object()) throw ValidationError("parse", "malformed angle: " + j.dump());
    if (j.contains("numeric")) return AngleValue::recognize(real_of(j["numeric"]));
    if (!j.contains("rational")) throw ValidationError("parse", "angle object needs a \"rational\" field: " + j.dump());
    Rational r = number_to_rational(j["rational"]);
    std::map<std::string, Rational> coeffs;
    if (j.contains("coeffs")) {
        const json& c = j["coeffs"];
        if (!c.is_object()) throw ValidationError("parse", "\"coeffs\" must be an object");
        for (auto it = c.begin(); it != c.end(); ++it) {
            if (!is_identifier(it.key())) throw ValidationError("parse", "malformed symbol name '" + it.key() + "'");
            coeffs[it.key()] = number_to_rational(it.value());
        }
    }
    return AngleValue(r, std::move(coeffs));
}

std::vector<AngleValue> angles_from_text(const std::string& raw, const AngleParseOptions& opts) {
    const std::string text = trim(raw);
    if (text.empty()) throw ValidationError("parse", "empty rotation vector");
    std::vector<AngleValue> out;
    if (text.front() == '[' || text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& original) {
            try {
                j = json::parse("[" + text + "]");
            } catch (const json::parse_error&) {
                throw ValidationError("parse", std::string("malformed JSON in rotation vector: ") + original.what());
            }
        }
        if (j.is_object() && j.contains("rho")) j = j["rho"];
        if (j.is_array()) {
            for (const auto& e : j) out.push_back(angle_from_json(e, opts));
        } else {
            out.push_back(angle_from_json(j, opts));
        }
        return out;
    }
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        out.push_back(angle_from_text(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start),
                                      opts));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

IrrationalBasis basis_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("basis", "basis must be a JSON object");
    std::map<std::string, double> numeric;
    if (j.contains("numeric")) {
        if (!j["numeric"].is_object()) throw ValidationError("basis", "\"numeric\" must be an object");
        for (auto it = j["numeric"].begin(); it != j["numeric"].end(); ++it) {
            if (!it.value().is_number()) throw ValidationError("basis", "numeric value of '" + it.key() + "' must be a number");
            numeric[it.key()] = it.value().get<double>();
        }
    }
    std::vector<std::string> symbols;
    if (j.contains("symbols")) {
        if (!j["symbols"].is_array()) throw ValidationError("basis", "\"symbols\" must be an array");
        for (const auto& s : j["symbols"]) {
            if (!s.is_string() || !is_identifier(s.get<std::string>()))
                throw ValidationError("basis", "malformed symbol " + s.dump());
            symbols.push_back(s.get<std::string>());
        }
    } else {
        for (const auto& kv : numeric) symbols.push_back(kv.first);
    }
    return IrrationalBasis(std::move(symbols), std::move(numeric));
}

GroupElement element_from_json(const json& j, std::optional<GroupId> expected) {
    std::optional<GroupId> group = expected;
    if (j.is_object() && j.contains("group")) {
        if (!j["group"].is_string()) throw ValidationError("parse", "\"group\" must be a string");
        auto g = parse_group(j["group"].get<std::string>());
        if (!g) throw ValidationError("unknown-group", "unknown group '" + j["group"].get<std::string>() + "'");
        if (expected && *g != *expected)
            throw ValidationError("group", std::string("element belongs to ") + group_name(*g) + ", expected " +
                                               group_name(*expected));
        group = g;
    }
    if (!group) throw ValidationError("group", "element JSON must name its group");
    auto field = [&](const char* name) -> const json& {
        if (j.is_array() && (std::string(name) == "q" || std::string(name) == "matrix")) return j;
        if (!j.is_object() || !j.contains(name))
            throw ValidationError("parse", std::string("element JSON is missing \"") + name + "\"");
        return j[name];
    };
    GroupElement g;
    switch (*group) {
        case GroupId::SU2: g = GroupElement::su2(quat_of(field("q"))); break;
        case GroupId::U2: g = GroupElement::u2(mat2_of(field("matrix"))); break;
        case GroupId::SO3: g = GroupElement::so3(mat3_of(field("matrix"))); break;
        case GroupId::SO3xS1: g = GroupElement::so3xs1(mat3_of(field("matrix")), complex_of(field("lambda"))); break;
        case GroupId::SpinC3: g = GroupElement::spinc3(quat_of(field("q")), complex_of(field("lambda"))); break;
        case GroupId::SU2xS1: g = GroupElement::su2xs1(quat_of(field("q")), complex_of(field("lambda"))); break;
    }
    validate_element(g);
    return g;
}

GroupElement element_from_text(const std::string& text, std::optional<GroupId> expected) {
    return element_from_json(parse_json_text(text, "element"), expected);
}

void collect_symbols(const AngleValue& a, std::set<std::string>& out) {
    for (const auto& kv : a.coeffs()) out.insert(kv.first);
}

}  // namespace rotconj
