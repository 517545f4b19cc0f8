// rhythmbool: cyclic averages of rhythms and their Boolean polynomials.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 exhaustive bound exceeded.

#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <rhythmbool/jsonio.hpp>
#include <rhythmbool/tables.hpp>
#include <rhythmbool/verify.hpp>

namespace rb = rhythmbool;

namespace {

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_n(const std::string& text, bool allow_range) {
    auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        int value = std::stoi(s, &used);
        if (used != s.size() || s.empty())
            throw std::invalid_argument("malformed modulus '" + s + "'");
        return value;
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    if (!allow_range)
        throw std::invalid_argument("this command takes a single modulus");
    NRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty modulus range '" + text + "'");
    return r;
}

std::string braces(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

int cmd_eval(int n, const std::string& literal, rb::TableFormat format) {
    rb::Modulus m(n);
    rb::BoolVec v = rb::parse_bool_vec(literal, m);
    rb::IncreasingRhythm onsets = rb::to_increasing_rhythm(v);
    rb::Rhythm pairwise = rb::discrete_average(onsets.rhythm());
    const bool trivial = onsets.size() < 2;
    const bool proper = trivial || rb::is_proper(onsets);
    rb::IncreasingRhythm averaged = rb::increasing_average(onsets);
    rb::BoolVec average = rb::boolean_average(v);
    if (format == rb::TableFormat::json) {
        rb::ordered_json j;
        j["n"] = n;
        j["vector"] = rb::to_json(v);
        j["onsets"] = onsets.onsets();
        j["pairwise_average"] = pairwise.onsets();
        j["proper"] = trivial ? rb::ordered_json() : rb::ordered_json(proper);
        j["averaged_onsets"] = averaged.onsets();
        j["average"] = rb::to_json(average);
        j["support"] = rb::support(average);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "vector            " << rb::to_literal(v) << "\n"
                  << "onsets            " << rb::to_literal(onsets.rhythm()) << "\n"
                  << "pairwise average  " << rb::to_literal(pairwise) << "\n"
                  << "proper            "
                  << (trivial  ? "n/a (fewer than two onsets)"
                      : proper ? "yes"
                               : "no (average rotated once)")
                  << "\n"
                  << "averaged onsets   " << rb::to_literal(averaged.rhythm()) << "\n"
                  << "average           " << rb::to_literal(average) << "\n"
                  << "support           " << braces(rb::support(average)) << "\n";
    }
    return 0;
}

int cmd_poly(int n, const std::string& method, const std::string& basis,
             rb::TableFormat format) {
    rb::Modulus m(n);
    rb::AnfPoly p = [&] {
        if (method == "closed") return rb::closed_form_bav0(m);
        if (method == "recurrence") {
            rb::AnfPoly acc = rb::closed_form_bav0(rb::Modulus(3));
            for (int k = 4; k <= n; ++k) acc = rb::recurrence_step(acc);
            return acc;
        }
        return rb::derived_bav0(m);
    }();
    p = rb::in_basis(p, rb::basis_from_name(basis));
    if (format == rb::TableFormat::json)
        std::cout << rb::to_json(p).dump(2) << "\n";
    else
        std::cout << rb::to_text(p) << "\n";
    return 0;
}

int cmd_verify(const std::string& check, NRange range, int jobs,
               rb::TableFormat format) {
    std::vector<rb::VerificationReport> reports =
        rb::run_checks(check, range.lo, range.hi, jobs);
    if (format == rb::TableFormat::json) {
        rb::ordered_json arr = rb::ordered_json::array();
        for (const rb::VerificationReport& r : reports) arr.push_back(rb::to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const rb::VerificationReport& r : reports)
            std::cout << rb::to_text_line(r) << "\n";
    }
    return rb::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic averages of rhythms and their Boolean polynomials"};
    app.require_subcommand(1);

    std::string n_text;
    std::string literal;
    std::string method = "closed";
    std::string basis = "y";
    std::string check;
    std::string table_id;
    std::string format = "text";
    int jobs = 1;

    CLI::App* eval = app.add_subcommand("eval", "average one bit vector end to end");
    eval->add_option("vector", literal, "bit vector literal, e.g. \"(0,1,1)\"")
        ->required();
    eval->add_option("--n", n_text, "modulus")->required();
    eval->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* poly =
        app.add_subcommand("poly", "emit the first-coordinate average polynomial");
    poly->add_option("--n", n_text, "modulus")->required();
    poly->add_option("--method", method, "enumerate|closed|recurrence")
        ->check(CLI::IsMember({"enumerate", "closed", "recurrence"}));
    poly->add_option("--basis", basis, "v|w|y")
        ->check(CLI::IsMember({"v", "w", "y"}));
    poly->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify =
        app.add_subcommand("verify", "run an exhaustive invariant check");
    verify->add_option("check", check, "which invariant to sweep")
        ->required()
        ->check(CLI::IsMember(rb::check_names()));
    verify->add_option("--n", n_text, "modulus or inclusive range A..B")->required();
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* tables = app.add_subcommand("tables", "print a reference table");
    tables->add_option("id", table_id, "table identifier")
        ->required()
        ->check(CLI::IsMember(rb::table_ids()));
    tables->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
        const rb::TableFormat fmt = rb::table_format_from_name(format);
        if (eval->parsed()) return cmd_eval(parse_n(n_text, false).lo, literal, fmt);
        if (poly->parsed())
            return cmd_poly(parse_n(n_text, false).lo, method, basis, fmt);
        if (verify->parsed())
            return cmd_verify(check, parse_n(n_text, true), jobs, fmt);
        std::cout << rb::render_table(rb::make_table(table_id), fmt);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const rb::BoundExceededError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
