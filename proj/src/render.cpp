#include <sstream>

#include <json.hpp>

#include <qseries/error.hpp>
#include <qseries/render.hpp>

namespace qseries
{

namespace
{

using nlohmann::json;

std::string q_part(const Rational &e)
{
    if (e == 1) {
        return "q";
    }
    if (is_integer(e) && sgn(e) > 0) {
        return "q^" + e.get_str();
    }
    return "q^(" + e.get_str() + ")";
}

json integer(const mpz_class &z)
{
    if (z.fits_slong_p()) {
        return json(z.get_si());
    }
    return json(z.get_str());
}

mpz_class read_integer(const json &j, const char *key)
{
    const auto it = j.find(key);
    if (it == j.end()) {
        throw Error(ErrorKind::InvalidArgument, std::string("series JSON: missing field ") + key);
    }
    if (it->is_number_integer()) {
        return mpz_class(it->get<long>());
    }
    if (it->is_string()) {
        try {
            return mpz_class(it->get<std::string>());
        } catch (const std::invalid_argument &) {
        }
    }
    throw Error(ErrorKind::InvalidArgument, std::string("series JSON: field ") + key + " is not an integer");
}

Rational read_fraction(const json &j, const char *num, const char *den)
{
    mpz_class d = read_integer(j, den);
    if (d == 0) {
        throw Error(ErrorKind::InvalidArgument, std::string("series JSON: zero ") + den);
    }
    Rational r(read_integer(j, num), d);
    r.canonicalize();
    return r;
}

} // namespace

std::string render_text(const QSeries &s)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : s.terms()) {
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            coeff = Rational(abs(c.re())).get_str();
        } else {
            coeff = c.to_string();
            if (coeff.front() != '(') {
                coeff = "(" + coeff + ")";
            }
        }
        std::string term;
        if (e == 0) {
            term = coeff;
        } else if (coeff == "1") {
            term = q_part(e);
        } else {
            term = coeff + "*" + q_part(e);
        }
        if (first) {
            os << (negative ? "-" : "") << term;
        } else {
            os << (negative ? " - " : " + ") << term;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    if (auto t = s.trunc()) {
        os << " + O(" << q_part(*t) << ")";
    }
    return os.str();
}

std::string render_json(const QSeries &s, int indent)
{
    json terms = json::array();
    for (const auto &[e, c] : s.terms()) {
        terms.push_back({{"num", integer(e.get_num())},
                         {"den_exp", integer(e.get_den())},
                         {"re_num", integer(c.re().get_num())},
                         {"re_den", integer(c.re().get_den())},
                         {"im_num", integer(c.im().get_num())},
                         {"im_den", integer(c.im().get_den())}});
    }
    json out = {{"terms", terms}, {"trunc", nullptr}};
    if (auto t = s.trunc()) {
        out["trunc"] = {{"num", integer(t->get_num())}, {"den", integer(t->get_den())}};
    }
    return out.dump(indent);
}

QSeries parse_series_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidArgument, std::string("series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw Error(ErrorKind::InvalidArgument, "series JSON: expected an object with a terms array");
    }
    std::vector<QSeries::Term> terms;
    for (const auto &t : j["terms"]) {
        if (!t.is_object()) {
            throw Error(ErrorKind::InvalidArgument, "series JSON: term is not an object");
        }
        terms.push_back({read_fraction(t, "num", "den_exp"),
                         Coefficient(read_fraction(t, "re_num", "re_den"), read_fraction(t, "im_num", "im_den"))});
    }
    std::optional<Exponent> trunc;
    if (j.contains("trunc") && !j["trunc"].is_null()) {
        trunc = read_fraction(j["trunc"], "num", "den");
    }
    return QSeries::from_terms(terms, trunc);
}

} // namespace qseries
