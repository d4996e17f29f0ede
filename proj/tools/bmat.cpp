// Command-line front end for the binary matroid toolkit. Every subcommand
// writes JSON to stdout. A matroid argument is a file path or
// name:<catalog name>, and "-" reads a document from stdin.

#include <CLI11.hpp>

#include <bmat/constructs.hpp>
#include <bmat/verify.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using bmat::binary_matroid;
using bmat::json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class matroid_source {
public:
    binary_matroid load(const std::string& arg) {
        if (arg.rfind("name:", 0) == 0) return bmat::named(arg.substr(5));
        if (arg == "-") {
            if (stdin_used_) throw usage_error("stdin can be read only once");
            stdin_used_ = true;
            return bmat::read_matroid(std::cin);
        }
        return bmat::read_matroid_file(arg);
    }

    std::pair<binary_matroid, binary_matroid> load_pair(const std::string& a, const std::string& b) {
        if (a == "-" && b == "-") throw usage_error("stdin can be read only once");
        auto first = load(a);
        return {std::move(first), load(b)};
    }

private:
    bool stdin_used_ = false;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void emit_matroid(const binary_matroid& m) { std::cout << bmat::to_document(m); }

json map_json(const bmat::element_map& map, int source_rank, int image_rank) {
    json arr = json::array();
    for (const auto& e : map.entries) {
        json item;
        item["source"] = bmat::column_string(e.source, source_rank);
        item["image"] = e.image ? json(bmat::column_string(*e.image, image_rank)) : json(nullptr);
        item["representative"] = e.representative;
        arr.push_back(std::move(item));
    }
    return arr;
}

json witness_document(const binary_matroid& host, const binary_matroid& pattern,
                      const bmat::induced_minor_witness& w) {
    json j;
    j["outer_flat"] = bmat::detail::columns_json(host, w.outer.elements);
    j["inner_flat"] = bmat::detail::columns_json(host, w.inner.elements);
    j["map"] = map_json(w.map, host.ambient_rank(), pattern.ambient_rank());
    return j;
}

// Resolves an element given by label or by column string.
bmat::point_t element_of(const binary_matroid& m, const std::string& token) {
    if (auto i = m.index_of_label(token)) return m.points()[*i];
    const bmat::point_t p = bmat::parse_column(token, m.ambient_rank());
    if (!m.contains(p)) throw usage_error("element " + token + " is not in the matroid");
    return p;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json target_json(const binary_matroid& m, const std::optional<bmat::target_flag>& flag) {
    json j;
    j["target"] = flag.has_value();
    if (flag) {
        // The first bit colors the top layer F_r - F_(r-1).
        std::string bits;
        json layers = json::array();
        for (std::size_t i = flag->flats.size() - 1; i >= 1; --i) bits.push_back(flag->green[i - 1] ? '1' : '0');
        for (std::size_t i = 1; i < flag->flats.size(); ++i)
            layers.push_back(bmat::detail::points_json(flag->flats[i], m.ambient_rank()));
        j["bits"] = bits;
        j["flats"] = std::move(layers);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary matroid toolkit: isomorphism, induced minors, conings and theorem checks"};
    app.require_subcommand(1);
    matroid_source source;
    int code = exit_ok;

    std::string arg_a, arg_b;

    auto* info = app.add_subcommand("info", "Basic structural properties of a matroid");
    info->add_option("matroid", arg_a, "Matroid document, - or name:<catalog>")->required();
    info->callback([&] {
        const auto m = source.load(arg_a);
        const auto c = bmat::connectivity(m);
        json j;
        j["rank"] = m.rank();
        j["size"] = m.size();
        j["connected"] = c.connected;
        j["three_connected"] = c.three_connected;
        j["chordal"] = bmat::is_chordal(m);
        j["round"] = bmat::is_round(m);
        j["triangle_free"] = bmat::is_triangle_free(m);
        j["shape"] = bmat::to_string(bmat::classify_shape(m));
        emit(j);
    });

    auto* iso = app.add_subcommand("iso", "Test two matroids for isomorphism (exit 1 if not isomorphic)");
    iso->add_option("a", arg_a)->required();
    iso->add_option("b", arg_b)->required();
    iso->callback([&] {
        const auto [a, b] = source.load_pair(arg_a, arg_b);
        const auto map = bmat::find_isomorphism(a, b);
        json j;
        j["isomorphic"] = map.has_value();
        if (map) j["columns"] = bmat::detail::points_json(*map, b.ambient_rank());
        emit(j);
        code = map ? exit_ok : exit_fail;
    });

    auto* im = app.add_subcommand("induced-minor", "Search for an induced minor (exit 1 if absent)");
    im->add_option("host", arg_a)->required();
    im->add_option("pattern", arg_b)->required();
    im->callback([&] {
        const auto [host, pattern] = source.load_pair(arg_a, arg_b);
        const auto w = bmat::has_induced_minor(host, pattern);
        json j;
        j["found"] = w.has_value();
        if (w) j["witness"] = witness_document(host, pattern, *w);
        emit(j);
        code = w ? exit_ok : exit_fail;
    });

    auto* mn = app.add_subcommand("minor", "Test for a minor (exit 1 if absent)");
    mn->add_option("host", arg_a)->required();
    mn->add_option("pattern", arg_b)->required();
    mn->callback([&] {
        const auto [host, pattern] = source.load_pair(arg_a, arg_b);
        const bool found = bmat::has_minor(host, pattern);
        emit(json{{"found", found}});
        code = found ? exit_ok : exit_fail;
    });

    bool tipped = false, tipless = false;
    auto* cone = app.add_subcommand("cone", "Binary coning, tipped or tipless");
    auto* tipped_flag = cone->add_flag("--tipped", tipped, "Keep the tip");
    cone->add_flag("--tipless", tipless, "Delete the tip")->excludes(tipped_flag);
    cone->add_option("matroid", arg_a)->required();
    cone->callback([&] {
        if (tipped == tipless) throw usage_error("cone needs exactly one of --tipped or --tipless");
        emit_matroid(bmat::cone(source.load(arg_a), tipped).matroid);
    });

    std::string flat_a, flat_b;
    auto* gpc = app.add_subcommand("gpc", "Generalized parallel connection across a projective geometry");
    gpc->add_option("a", arg_a)->required();
    gpc->add_option("b", arg_b)->required();
    gpc->add_option("--flat-a", flat_a, "Comma-separated elements of the flat in a (labels or columns)");
    gpc->add_option("--flat-b", flat_b, "Images of the --flat-a elements in b, in the same order");
    gpc->callback([&] {
        const auto [a, b] = source.load_pair(arg_a, arg_b);
        const auto xs = split_list(flat_a);
        const auto ys = split_list(flat_b);
        if (xs.size() != ys.size()) throw usage_error("--flat-a and --flat-b must list the same number of elements");
        bmat::glue_map glue;
        for (std::size_t i = 0; i < xs.size(); ++i) glue.emplace_back(element_of(a, xs[i]), element_of(b, ys[i]));
        emit_matroid(bmat::gpc_across_pg(a, b, glue));
    });

    std::string bits;
    auto* target = app.add_subcommand("target", "Matroid of a coning sequence given as a 0-1 string");
    target->add_option("bits", bits)->required();
    target->callback([&] { emit_matroid(bmat::target_from_bits(bits)); });

    auto* is_target = app.add_subcommand("is-target", "Recognize binary projective targets (exit 1 if not)");
    is_target->add_option("matroid", arg_a)->required();
    is_target->callback([&] {
        const auto m = source.load(arg_a);
        const auto flag = bmat::is_projective_target(m);
        emit(target_json(m, flag));
        code = flag ? exit_ok : exit_fail;
    });

    int spike_rank = 0;
    bool cotip = false;
    auto* sp = app.add_subcommand("spike", "Binary r-spike with tip, optionally with cotip");
    sp->add_option("r", spike_rank)->required()->check(CLI::Range(3, 31));
    sp->add_flag("--cotip", cotip, "Delete the element on the line through the tip and the cotip");
    sp->callback([&] { emit_matroid(bmat::spike(spike_rank, cotip)); });

    std::string name;
    bool list = false;
    auto* nm = app.add_subcommand("named", "Catalog matroid by name");
    nm->add_option("name", name);
    nm->add_flag("--list", list, "List catalog entries");
    nm->callback([&] {
        if (list) {
            json arr = json::array();
            for (const auto& e : bmat::catalog()) arr.push_back(json{{"name", e.name}, {"description", e.description}});
            emit(arr);
            return;
        }
        if (name.empty()) throw usage_error("named needs a name or --list");
        emit_matroid(bmat::named(name));
    });

    int max_rank = 4;
    std::optional<int> max_elements;
    std::vector<std::string> filters;
    int jobs = 1;
    auto scope_of = [&] {
        bmat::enumeration_scope s;
        s.max_rank = max_rank;
        s.max_elements = max_elements.value_or(max_rank >= 5 ? 12 : 15);
        for (const auto& f : filters) s.filters.enable(f);
        s.validate();
        return s;
    };

    auto* en = app.add_subcommand("enumerate", "Canonical representatives of simple binary matroids");
    en->add_option("--max-rank", max_rank)->required();
    en->add_option("--max-elements", max_elements);
    en->add_option("--filter", filters, "connected, 3-connected or triangle-free (repeatable)");
    en->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    en->callback([&] {
        const auto s = scope_of();
        const auto ms = bmat::enumerate_matroids(s, jobs);
        json j;
        j["scope"] = bmat::scope_to_json(s);
        j["count"] = ms.size();
        json arr = json::array();
        for (const auto& m : ms) arr.push_back(bmat::to_json(m));
        j["matroids"] = std::move(arr);
        emit(j);
    });

    std::string theorem, out_path = "-";
    auto* vf = app.add_subcommand("verify", "Run a registered theorem check, or all of them");
    vf->add_option("theorem", theorem, "Theorem id or all")->required();
    vf->add_option("--max-rank", max_rank)->required();
    vf->add_option("--max-elements", max_elements);
    vf->add_option("--filter", filters);
    vf->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    vf->add_option("--out", out_path, "Report path, - for stdout");
    vf->callback([&] {
        const auto s = scope_of();
        bmat::verify_context ctx(jobs);
        json doc;
        bool pass = true;
        if (theorem == "all") {
            const auto rs = bmat::verify_all(s, ctx);
            doc = json::array();
            for (const auto& r : rs) {
                doc.push_back(bmat::to_json(r));
                pass = pass && r.passed();
                std::cerr << r.theorem_id << ": " << (r.passed() ? "pass" : "fail") << '\n';
            }
        } else {
            bmat::find_check(theorem);
            const auto r = bmat::verify_theorem(theorem, s, ctx);
            doc = bmat::to_json(r);
            pass = r.passed();
        }
        if (out_path == "-")
            std::cout << doc.dump(2) << '\n';
        else
            bmat::write_json_file(doc, out_path);
        code = pass ? exit_ok : exit_fail;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return code;
}
