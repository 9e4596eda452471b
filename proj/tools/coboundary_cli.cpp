#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coboundary/bracketing.hpp"
#include "coboundary/cactus.hpp"
#include "coboundary/commutor.hpp"
#include "coboundary/errors.hpp"
#include "coboundary/io.hpp"
#include "coboundary/tableau.hpp"
#include "coboundary/tensor.hpp"

using namespace coboundary;

namespace {

std::vector<CrystalGraph> read_all(const std::vector<std::string>& paths) {
    std::vector<CrystalGraph> out;
    for (const auto& p : paths) out.push_back(read_crystal_file(p));
    for (std::size_t k = 1; k < out.size(); ++k)
        if (!(out[k].datum() == out[0].datum()))
            throw DatumMismatch("'" + paths[k] + "' has datum " + out[k].datum().name() + ", expected " + out[0].datum().name());
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::string tensor_map_json(const TensorMap& m) {
    nlohmann::ordered_json doc;
    auto one_based = [](const Ordering& o) {
        std::vector<std::size_t> v;
        for (std::size_t x : o) v.push_back(x + 1);
        return v;
    };
    doc["source"] = one_based(m.source);
    doc["target"] = one_based(m.target);
    doc["image"] = m.map.image;
    return doc.dump(1) + "\n";
}

std::vector<int> parse_ordering(const std::string& text) {
    std::vector<int> out;
    std::string digits;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!digits.empty()) out.push_back(std::stoi(digits));
            digits.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else {
            throw ParseError("bad ordering '" + text + "'");
        }
    }
    if (!digits.empty()) {
        if (text.find(',') == std::string::npos && text.find(' ') == std::string::npos) {
            for (char c : digits) out.push_back(c - '0');
        } else {
            out.push_back(std::stoi(digits));
        }
    }
    return out;
}

std::vector<Interval> parse_crossings(const std::string& text) {
    std::vector<Interval> out;
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos; };
    skip();
    while (pos < text.size()) {
        int p = 0, q = 0;
        char close = 0;
        int used = 0;
        if (std::sscanf(text.c_str() + pos, "(%d,%d%c%n", &p, &q, &close, &used) != 3 || close != ')')
            throw ParseError("bad crossing list '" + text + "'; expected \"(p,q),(p,q)\"");
        out.push_back({p, q});
        pos += static_cast<std::size_t>(used);
        skip();
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal commutors, cactus group actions and cacti cells"};
    app.require_subcommand(1);

    std::string datum_name, shape_text, out_path, dot_path, word_text, start_text, cross_text;
    std::vector<std::string> files;
    bool dot = false, do_decompose = false, count_only = false;
    int p = 0, q = 0, n = 0, codim = 0;

    auto* gen = app.add_subcommand("gen", "Generate B_lambda for GL_n from a shape such as \"2,1\"");
    gen->add_option("datum", datum_name)->required();
    gen->add_option("shape", shape_text)->required();
    gen->add_flag("--dot", dot, "emit DOT instead of JSON");
    gen->add_option("-o,--output", out_path);

    auto* tens = app.add_subcommand("tensor", "Tensor product of two crystals");
    tens->add_option("files", files)->required()->expected(2);
    tens->add_flag("--decompose", do_decompose);
    tens->add_option("--dot", dot_path, "also write DOT to this file");
    tens->add_option("-o,--output", out_path);

    auto* dec = app.add_subcommand("decompose", "Decompose the tensor product of the given crystals");
    dec->add_option("files", files)->required()->expected(1, -1);

    auto* xi_cmd = app.add_subcommand("xi", "Schützenberger involution as a vertex map");
    xi_cmd->add_option("file", files)->required()->expected(1);

    auto* sig = app.add_subcommand("sigma", "Commutor A(x)B -> B(x)A as a vertex map");
    sig->add_option("files", files)->required()->expected(2);

    auto* sint = app.add_subcommand("s-interval", "Interval reversal s_{p,q} on A_1(x)..(x)A_n");
    sint->add_option("p", p)->required();
    sint->add_option("q", q)->required();
    sint->add_option("files", files)->required()->expected(1, -1);

    auto* cact = app.add_subcommand("cactus-act", "Action of a cactus word on A_1(x)..(x)A_n");
    cact->add_option("--word", word_text)->required();
    cact->add_option("files", files)->required()->expected(1, -1);

    auto* val = app.add_subcommand("validate", "Check the crystal axioms");
    val->add_option("file", files)->required()->expected(1);

    auto* cells = app.add_subcommand("cells", "Cells of the moduli space of n-fruit cacti");
    cells->add_option("n", n)->required()->check(CLI::Range(1, 9));
    cells->add_option("--codim", codim)->required()->check(CLI::NonNegativeNumber);
    cells->add_flag("--count-only", count_only);

    auto* path = app.add_subcommand("path", "Cactus word of a path through facets");
    path->add_option("--start", start_text)->required();
    path->add_option("--cross", cross_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string output;
        if (*gen) {
            RootDatum datum = RootDatum::parse(datum_name);
            if (datum.family() != Family::GL) throw Error("gen supports GL_n data only; got " + datum.name());
            CrystalGraph b = generate_B_lambda(Shape::parse(shape_text), datum.rank());
            output = dot ? crystal_to_dot(b) : crystal_to_json(b);
        } else if (*tens) {
            auto fs = read_all(files);
            CrystalGraph b = tensor(fs[0], fs[1]);
            if (!dot_path.empty()) write_file(dot_path, crystal_to_dot(b));
            output = do_decompose ? to_string(decompose(b)) + "\n" : crystal_to_json(b);
        } else if (*dec) {
            auto fs = read_all(files);
            output = to_string(decompose(tensor_many(std::span<const CrystalGraph>(fs)))) + "\n";
        } else if (*xi_cmd) {
            auto fs = read_all(files);
            output = vertex_map_to_json(fs[0], fs[0], xi(fs[0]));
        } else if (*sig) {
            auto fs = read_all(files);
            output = vertex_map_to_json(tensor(fs[0], fs[1]), tensor(fs[1], fs[0]), sigma(fs[0], fs[1]));
        } else if (*sint) {
            TensorFamily family(read_all(files));
            if (p < 1 || p > q || q > static_cast<int>(family.size()))
                throw IndexError("s-interval needs 1 <= p <= q <= " + std::to_string(family.size()));
            output = tensor_map_json(s_interval(family, p, q));
        } else if (*cact) {
            TensorFamily family(read_all(files));
            CactusWord w = CactusWord::parse(word_text, static_cast<int>(family.size()));
            output = tensor_map_json(act(w, family));
        } else if (*val) {
            auto fs = read_all(files);
            ValidationReport report = validate(fs[0]);
            if (!report.ok()) {
                std::cout << report.to_string();
                std::cerr << "validate: " << report.violations.size() << " violation(s)\n";
                return 1;
            }
            output = "ok\n";
        } else if (*cells) {
            auto list = enumerate_cells(n, codim);
            if (count_only) {
                output = std::to_string(list.size()) + "\n";
            } else {
                for (const auto& c : list) output += c.to_string() + "\n";
            }
        } else if (*path) {
            Bracketing start = Bracketing::top(parse_ordering(start_text));
            PathResult r = path_word(parse_crossings(cross_text), start);
            output = r.word.to_string() + "\n" + r.end.to_string() + "\n";
        }
        if (out_path.empty())
            std::cout << output;
        else
            write_file(out_path, output);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
