// Writes the diagram corpus used by `annularkh check` and the tests.
//
//   make_corpus <corpus dir> <bad fixture dir>
//
// Top-level files form the regular corpus; <corpus dir>/perf holds the large
// timing diagram.

#include "annularkh/diagram.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace annularkh;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& dir, const AnnularDiagram& d) {
    fs::create_directories(dir);
    std::ofstream out(dir / (d.name() + ".json"), std::ios::binary);
    out << to_json(d) << "\n";
}

AnnularDiagram named(AnnularDiagram d, const std::string& name, const std::string& isotopic_to = "") {
    d.set_name(name);
    d.set_isotopic_to(isotopic_to);
    return d;
}

AnnularDiagram loops(const std::string& name, const std::vector<int>& windings) {
    std::vector<FreeLoop> ls;
    for (std::size_t x = 0; x < windings.size(); ++x) ls.push_back({"l" + std::to_string(x + 1), windings[x], {}});
    return AnnularDiagram(name, {}, {}, std::move(ls));
}

AnnularDiagram braid(const std::string& name, std::size_t strands, const std::vector<int>& word) {
    return braid_closure(strands, word, name);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: make_corpus <corpus dir> <bad fixture dir>\n";
        return 2;
    }
    const fs::path dir = argv[1];
    const fs::path bad = argv[2];
    std::vector<AnnularDiagram> corpus;

    // Crossingless diagrams with up to six circles.
    corpus.push_back(loops("loop_trivial", {0}));
    corpus.push_back(loops("loop_essential", {1}));
    corpus.push_back(loops("loops_t2", {0, 0}));
    corpus.push_back(loops("loops_t1_n1", {0, 1}));
    corpus.push_back(loops("loops_n2", {1, 1}));
    corpus.push_back(loops("loops_n2_opposite", {1, -1}));
    corpus.push_back(loops("loops_t2_n1", {0, 0, 1}));
    corpus.push_back(loops("loops_t1_n3", {0, 1, 1, 1}));
    corpus.push_back(loops("loops_t3_n2", {0, 0, 0, 1, -1}));
    corpus.push_back(loops("loops_t2_n4", {0, 0, 1, 1, 1, 1}));
    corpus.push_back(loops("loops_n6", {1, -1, 1, -1, 1, -1}));
    corpus.push_back(loops("loops_t6", {0, 0, 0, 0, 0, 0}));
    {
        AnnularDiagram d = loops("unknot_doubled", {0});
        corpus.push_back(named(finger_move(d, 0, 1), "unknot_doubled"));
    }

    // Braid closures.
    corpus.push_back(braid("sigma1", 2, {1}));
    corpus.push_back(braid("sigma1_inverse", 2, {-1}));
    corpus.push_back(braid("hopf", 2, {1, 1}));
    corpus.push_back(braid("hopf_negative", 2, {-1, -1}));
    const AnnularDiagram trefoil = braid("trefoil_braid", 2, {1, 1, 1});
    corpus.push_back(trefoil);
    corpus.push_back(braid("trefoil_left_braid", 2, {-1, -1, -1}));
    corpus.push_back(braid("torus_2_5", 2, {1, 1, 1, 1, 1}));
    corpus.push_back(braid("unknot_3braid", 3, {1, 2}));
    corpus.push_back(braid("figure_eight_braid", 3, {1, -2, 1, -2}));
    corpus.push_back(braid("borromean_braid", 3, {1, -2, 1, -2, 1, -2}));
    corpus.push_back(braid("torus_3_4", 3, {1, 2, 1, 2, 1, 2, 1, 2}));
    corpus.push_back(braid("torus_3_5", 3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}));
    corpus.push_back(braid("mixed_3braid", 3, {1, 1, 1, 2, -1, 2}));
    corpus.push_back(braid("braid4_a", 4, {1, 2, 3}));
    corpus.push_back(braid("braid4_b", 4, {1, -2, 3, -2, 1}));
    corpus.push_back(braid("braid4_c", 4, {1, 2, 3, 1, 2, 3, -1}));

    // The same planar diagrams with the axis in other faces.
    corpus.push_back(named(place_axis(trefoil, 0, 0), "trefoil_away"));
    corpus.push_back(named(place_axis(trefoil, 0, 1), "trefoil_axis_a"));
    corpus.push_back(named(place_axis(trefoil, 2, 4), "trefoil_axis_b"));
    corpus.push_back(named(place_axis(braid("", 3, {1, -2, 1, -2}), 1, 3), "figure_eight_axis"));
    corpus.push_back(named(place_axis(braid("", 2, {1, 1}), 0, 2), "hopf_axis"));
    corpus.push_back(named(place_axis(braid("", 2, {1, 1, 1, 1, 1}), 1, 5), "torus_2_5_axis"));
    corpus.push_back(named(place_axis(braid("", 3, {1, 2, 1, 2, 1, 2, 1, 2}), 1, 4), "torus_3_4_axis"));
    corpus.push_back(named(place_axis(braid("", 3, {1, -2, 1, -2, 1, -2}), 2, 5), "borromean_axis"));
    corpus.push_back(named(place_axis(braid("", 3, {1, 1, 1, 2, -1, 2}), 0, 7), "mixed_3braid_axis"));

    // Reidemeister-related pairs, all moves away from the ray.
    const std::pair<KinkType, const char*> kinks[] = {{KinkType::first_under_positive, "trefoil_kink_a"},
                                                       {KinkType::first_under_negative, "trefoil_kink_b"},
                                                       {KinkType::second_under_positive, "trefoil_kink_c"},
                                                       {KinkType::second_under_negative, "trefoil_kink_d"}};
    for (const auto& [type, name] : kinks) corpus.push_back(named(add_kink(trefoil, 1, type), name, "trefoil_braid"));
    corpus.push_back(named(add_kink(braid("", 2, {1, 1}), 0, KinkType::first_under_positive), "hopf_kink", "hopf"));
    corpus.push_back(named(add_kink(place_axis(trefoil, 0, 1), 0, KinkType::second_under_negative), "trefoil_axis_a_kink",
                           "trefoil_axis_a"));
    corpus.push_back(braid("r2_two_strands", 2, {1, -1}));
    corpus.back().set_isotopic_to("loops_n2");
    corpus.push_back(named(braid("", 3, {1, 2, -2}), "r2_three_strands", "sigma1_u3"));
    corpus.push_back(braid("sigma1_u3", 3, {1}));
    corpus.push_back(named(braid("", 2, {1, 1, 1, 1, -1}), "trefoil_r2", "trefoil_braid"));
    corpus.push_back(braid("r3_left", 3, {1, 2, 1}));
    corpus.push_back(named(braid("", 3, {2, 1, 2}), "r3_right", "r3_left"));
    corpus.push_back(braid("sigma2_3braid", 3, {2}));
    corpus.push_back(named(braid("", 3, {1, 2, -1}), "sigma2_conjugate", "sigma2_3braid"));
    corpus.push_back(named(braid("", 4, {3, 1}), "commute_4braid", "braid4_commute_base"));
    corpus.push_back(braid("braid4_commute_base", 4, {1, 3}));
    corpus.push_back(named(relabel(trefoil, 7), "trefoil_relabelled", "trefoil_braid"));

    for (const auto& d : corpus) write(dir, d);

    // Timing diagram: 12 crossings.
    std::vector<int> word;
    for (int x = 0; x < 6; ++x) word.insert(word.end(), {1, -1});
    write(dir / "perf", braid("perf_12", 2, word));

    // Orientation-inconsistent fixture: the trefoil with one crossing's slots
    // rotated so that slot a is outgoing.
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(to_json(trefoil));
    doc["name"] = "mis_signed";
    auto& slots = doc["crossings"][0]["slots"];
    std::rotate(slots.begin(), slots.begin() + 1, slots.end());
    for (auto& e : doc["edges"])
        for (const char* end : {"from", "to"})
            if (e[end].is_object() && e[end]["crossing"] == doc["crossings"][0]["id"])
                e[end]["slot"] = (e[end]["slot"].get<int>() + 3) % 4;
    fs::create_directories(bad);
    std::ofstream(bad / "mis_signed.json", std::ios::binary) << doc.dump(2) << "\n";

    std::cout << "wrote " << corpus.size() << " diagrams to " << dir.string() << "\n";
    return 0;
}
