#include "fmk/kernel_io.hpp"

#include "fmk/errors.hpp"
#include "fmk/lattice.hpp"
#include "json_util.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fmk {

namespace {

using nlohmann::json;

// Byte offset -> 1-based line number, for parse diagnostics.
std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

Rational rational_from_json(const json& v, const std::string& field) {
    // nlohmann parses non-negative literals as unsigned; check that first so
    // values above INT64_MAX do not get truncated.
    if (v.is_number_unsigned()) return Rational(Int(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("field '" + field + "': " + e.what());
        }
    }
    if (v.is_number_float())
        throw ParseError("field '" + field + "': floating-point numbers are not accepted; "
                         "use an integer or a \"p/q\" string");
    throw ParseError("field '" + field + "': expected an integer or a \"p/q\" string");
}

int genus_from_json(const json& v, const std::string& field) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError("field '" + field + "': expected a non-negative integer");
    if (v.is_number_unsigned()) {
        const auto g = v.get<std::uint64_t>();
        if (g > 64) throw ParseError("field '" + field + "': genus is implausibly large");
        return static_cast<int>(g);
    }
    const auto g = v.get<std::int64_t>();
    if (g < 0) throw ParseError("field '" + field + "': genus must be non-negative");
    if (g > 64) throw ParseError("field '" + field + "': genus is implausibly large");
    return static_cast<int>(g);
}

} // namespace

std::string emit_kernel_json(const KernelClass& e) {
    json j;
    j["genus_source"] = e.genus_source;
    j["genus_target"] = e.genus_target;
    j["rank"] = detail::rational_to_json(e.rank);
    j["a"] = detail::rational_to_json(e.a);
    j["b"] = detail::rational_to_json(e.b);
    j["ch2"] = detail::rational_to_json(e.ch2);
    if (!e.gamma.is_zero()) {
        const RatMat action = SymplecticLattice::standard(e.genus_source).form * e.gamma;
        j["gamma"] = detail::matrix_to_json(action);
    }
    return detail::dump_canonical(j);
}

KernelClass parse_kernel_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON syntax error (line " +
                         std::to_string(line_of_byte(text, e.byte > 0 ? e.byte - 1 : 0)) +
                         "): " + e.what());
    }
    if (!j.is_object()) throw ParseError("kernel file must contain a JSON object");

    static const std::set<std::string> known = {"genus_source", "genus_target", "rank",
                                                "a",            "b",            "ch2",
                                                "gamma"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw ParseError("unknown field '" + key + "'");
    }
    for (const char* required : {"genus_source", "genus_target", "rank", "a", "b", "ch2"}) {
        if (!j.contains(required))
            throw ParseError(std::string("missing required field '") + required + "'");
    }

    const int gs = genus_from_json(j["genus_source"], "genus_source");
    const int gt = genus_from_json(j["genus_target"], "genus_target");
    const Rational rank = rational_from_json(j["rank"], "rank");
    const Rational a = rational_from_json(j["a"], "a");
    const Rational b = rational_from_json(j["b"], "b");
    const Rational ch2 = rational_from_json(j["ch2"], "ch2");

    RatMat action(2 * gs, 2 * gt);
    if (j.contains("gamma")) {
        const json& rows = j["gamma"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != 2 * gs)
            throw ParseError("field 'gamma': expected " + std::to_string(2 * gs) +
                             " rows (2 * genus_source)");
        for (int i = 0; i < 2 * gs; ++i) {
            const json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != 2 * gt)
                throw ParseError("field 'gamma[" + std::to_string(i) + "]': expected " +
                                 std::to_string(2 * gt) + " entries (2 * genus_target)");
            for (int k = 0; k < 2 * gt; ++k) {
                action.at(i, k) =
                    rational_from_json(row[static_cast<std::size_t>(k)],
                                       "gamma[" + std::to_string(i) + "][" + std::to_string(k) + "]");
            }
        }
    }
    // Wire gamma is the action form G = J.M; recover the Kunneth matrix.
    const RatMat m = SymplecticLattice::standard(gs).form.inverse() * action;
    return KernelClass(gs, gt, rank, a, b, m, ch2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read file '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw ParseError("cannot write file '" + path + "'");
}

KernelClass load_kernel_file(const std::string& path) {
    try {
        return parse_kernel_json(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_kernel_file(const std::string& path, const KernelClass& e) {
    write_text_file(path, emit_kernel_json(e));
}

} // namespace fmk
