// quiver-orbits: enumerate, classify, and verify K-orbits on the enhanced
// colored nilpotent cone of a cyclic quiver.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 census budget
// exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quiver/label_json.hpp"
#include "quiver/linear_oracle.hpp"
#include "quiver/orbit_catalog.hpp"
#include "quiver/render.hpp"

namespace {

using namespace quiver;
using nlohmann::json;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

long long census_budget() {
    if (const char* env = std::getenv("COLORED_QUIVER_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("COLORED_QUIVER_BUDGET must be a positive integer");
    }
    return kDefaultCensusBudget;
}

struct LabelArgs {
    int n = 1;
    std::string lambda, epsilon, mu;

    MarkedColoredPartition marked() const {
        std::vector<int> l = parse_int_list(lambda);
        std::vector<int> e = parse_int_list(epsilon);
        std::vector<int> m = mu.empty() ? std::vector<int>(l.size(), 0) : parse_int_list(mu);
        return MarkedColoredPartition(Partition(l), e, m, n);
    }
};

void add_label_options(CLI::App* cmd, LabelArgs& args, bool mu_required) {
    cmd->add_option("--n", args.n, "number of colors")->required();
    cmd->add_option("--lambda", args.lambda, "row lengths, comma separated")->required();
    cmd->add_option("--epsilon", args.epsilon, "row colors, comma separated")->required();
    auto* mu = cmd->add_option("--mu", args.mu, "row marks, comma separated");
    if (mu_required) mu->required();
}

void emit(const json& j, bool as_json, std::ostream& os) {
    if (as_json) {
        os << j.dump() << '\n';
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        os << it.key() << ": " << it.value().dump() << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"orbit calculus for enhanced nilpotent cyclic quiver representations"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bool signs = false;
    app.add_flag("--signs", signs, "print 2-colored labels with + and -");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list orbit labels of a signature");
    int en_n = 1;
    std::string en_signature;
    int en_vector_color = -1;
    bool en_plain = false;
    enumerate->add_option("--n", en_n, "number of colors")->required();
    enumerate->add_option("--signature", en_signature, "per-color box counts")->required();
    enumerate->add_option("--vector-color", en_vector_color,
                          "restrict to enhanced orbits with vector in this color");
    enumerate->add_flag("--plain", en_plain, "list plain nilpotent orbit labels only");

    // dim
    auto* dim = app.add_subcommand("dim", "dimension of the orbit of a label");
    LabelArgs dim_args;
    add_label_options(dim, dim_args, false);

    // normalize
    auto* normalize_cmd = app.add_subcommand("normalize", "colored n-bipartition of a marking");
    LabelArgs norm_args;
    int norm_class = 0;
    add_label_options(normalize_cmd, norm_args, true);
    normalize_cmd->add_option("--class", norm_class, "class color of the marking")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "classify a marking or a raw matrix pair");
    LabelArgs cls_args;
    std::string cls_matrix;
    classify->add_option("--n", cls_args.n, "number of colors");
    classify->add_option("--lambda", cls_args.lambda, "row lengths");
    classify->add_option("--epsilon", cls_args.epsilon, "row colors");
    classify->add_option("--mu", cls_args.mu, "row marks");
    classify->add_option("--matrix", cls_matrix, "JSON pair document file (- for stdin)");

    // minimal
    auto* minimal = app.add_subcommand("minimal", "minimal marking and its decomposition");
    LabelArgs min_args;
    add_label_options(minimal, min_args, true);

    // verify
    auto* verify = app.add_subcommand("verify", "finite-field census against the catalog");
    int ver_n = 1;
    std::string ver_signature;
    long long ver_field = 2;
    verify->add_option("--n", ver_n, "number of colors")->required();
    verify->add_option("--signature", ver_signature, "per-color dimensions")->required();
    verify->add_option("--field", ver_field, "prime field size")->required();

    // render
    auto* render = app.add_subcommand("render", "ASCII diagram of a label");
    LabelArgs ren_args;
    add_label_options(render, ren_args, false);

    CLI11_PARSE(app, argc, argv);
    bool as_json = format == "json";

    if (*enumerate) {
        std::vector<int> sig = parse_int_list(en_signature);
        Signature xi(std::vector<long long>(sig.begin(), sig.end()));
        if (xi.colors() != en_n) throw std::invalid_argument("signature length must equal n");
        if (en_plain) {
            for (const ColoredPartition& cp : enumerate_colored_partitions(xi, en_n)) {
                std::vector<int> zeros(static_cast<size_t>(cp.length()), 0);
                MarkedColoredPartition mcp(cp.shape(), cp.colors(), zeros, en_n);
                json j = label_to_json(mcp);
                j["dim"] = dim_nilpotent_orbit(cp);
                j["signature"] = xi.counts();
                emit(j, as_json, std::cout);
                if (!as_json) std::cout << render_diagram(cp, signs) << '\n';
            }
        } else if (en_vector_color >= 0) {
            CyclicColor m(en_vector_color, en_n);
            for (const MarkedColoredPartition& mcp : enumerate_colored_bipartitions(xi, en_n, m)) {
                json j = label_to_json(mcp, m);
                j["dim"] = dim_enhanced_orbit(mcp);
                j["signature"] = xi.counts();
                emit(j, as_json, std::cout);
                if (!as_json) std::cout << render_marked_diagram(mcp, signs) << '\n';
            }
        } else {
            for (const OrbitRecord& rec : enumerate_orbit_classes(xi, en_n))
                emit(orbit_record_to_json(rec), as_json, std::cout);
        }
        return 0;
    }

    if (*dim) {
        MarkedColoredPartition mcp = dim_args.marked();
        json j;
        if (dim_args.mu.empty()) {
            j["dim"] = dim_nilpotent_orbit(mcp.base());
            j["kind"] = "nilpotent";
        } else {
            j["dim"] = dim_enhanced_orbit(mcp);
            j["kind"] = "enhanced";
        }
        emit(j, as_json, std::cout);
        return 0;
    }

    if (*normalize_cmd) {
        MarkedColoredPartition mcp = norm_args.marked();
        CyclicColor m(norm_class, norm_args.n);
        MarkedColoredPartition out = normalize(mcp, m);
        emit(label_to_json(out, m), as_json, std::cout);
        if (!as_json) std::cout << render_marked_diagram(out, signs);
        return 0;
    }

    if (*classify) {
        if (!cls_matrix.empty()) {
            json doc;
            if (cls_matrix == "-") {
                std::cin >> doc;
            } else {
                std::ifstream in(cls_matrix);
                if (!in) throw std::invalid_argument("cannot open " + cls_matrix);
                in >> doc;
            }
            PairDocument pair = pair_from_json(doc);
            OrbitClass oc = classify_pair(pair.vector, pair.x);
            json j = label_to_json(oc.as_marked());
            j["zero_vector"] = oc.zero_vector();
            j["dim"] = orbit_dimension(pair.vector, pair.x);
            emit(j, as_json, std::cout);
            return 0;
        }
        if (cls_args.lambda.empty() || cls_args.epsilon.empty() || cls_args.mu.empty())
            throw std::invalid_argument("classify needs either --matrix or a full label");
        MarkedColoredPartition mcp = cls_args.marked();
        MarkingClassification c = classify_marking(mcp);
        json j;
        j["bipartition"] = c.is_bipartition;
        j["n_bipartition"] = c.is_n_bipartition;
        j["colored_n_bipartition"] = c.is_colored_n_bipartition;
        j["generalized_n_bipartition"] = c.is_generalized_n_bipartition;
        j["class_color"] = c.class_color ? json(c.class_color->rep()) : json(nullptr);
        emit(j, as_json, std::cout);
        return 0;
    }

    if (*minimal) {
        MarkedColoredPartition out = minimal_marking(min_args.marked());
        CharacteristicDecomposition split = characteristic_decomposition(out);
        json j = label_to_json(out);
        j["characteristic"] = label_to_json(split.characteristic)["rows"];
        std::vector<int> zeros(static_cast<size_t>(split.plain.length()), 0);
        j["plain"] = label_to_json(MarkedColoredPartition(split.plain.shape(),
                                                          split.plain.colors(), zeros,
                                                          out.modulus()))["rows"];
        emit(j, as_json, std::cout);
        return 0;
    }

    if (*verify) {
        std::vector<int> sig = parse_int_list(ver_signature);
        Signature xi(std::vector<long long>(sig.begin(), sig.end()));
        if (xi.colors() != ver_n) throw std::invalid_argument("signature length must equal n");
        CensusResult census = orbit_census(xi, ver_n, ver_field, census_budget());
        std::vector<OrbitRecord> records = enumerate_orbit_classes(xi, ver_n);
        std::vector<OrbitClass> predicted;
        for (const OrbitRecord& r : records) predicted.push_back(r.label);
        std::sort(predicted.begin(), predicted.end());
        bool match = predicted == census.labels;
        if (as_json) {
            json j;
            j["orbits"] = census.orbit_count;
            j["classes"] = static_cast<long long>(predicted.size());
            j["match"] = match;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "orbits: " << census.orbit_count
                      << ", classes: " << predicted.size() << ", "
                      << (match ? "MATCH" : "MISMATCH") << '\n';
        }
        return match ? 0 : 1;
    }

    if (*render) {
        MarkedColoredPartition mcp = ren_args.marked();
        if (ren_args.mu.empty())
            std::cout << render_diagram(mcp.base(), signs);
        else
            std::cout << render_marked_diagram(mcp, signs);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const quiver::BudgetError& e) {
        nlohmann::json j;
        j["error"] = e.what();
        j["code"] = 3;
        std::cerr << j.dump() << '\n';
        return 3;
    } catch (const std::exception& e) {
        nlohmann::json j;
        j["error"] = e.what();
        j["code"] = 2;
        std::cerr << j.dump() << '\n';
        return 2;
    }
}
