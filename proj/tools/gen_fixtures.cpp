// Writes the checked-in fixture files into the directory given as argument.

#include "sset/sset.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace sset;

namespace {

std::filesystem::path dir;

void write(const std::string& file, const std::string& text)
{
    std::ofstream(dir / file) << text;
    std::cout << "wrote " << (dir / file).string() << "\n";
}

SimplicialSet circle(int D)
{
    const SimplicialMap b = boundary_inclusion(1, D);
    return pushout(to_point(b.source()), b).object;
}

std::string lift_problem(const SimplicialMap& left, const SimplicialMap& right, const SimplicialMap& top,
                         const SimplicialMap& bottom)
{
    Writer w;
    w.map(left, "left");
    w.map(right, "right");
    w.map(top, "top");
    w.map(bottom, "bottom");
    return w.str();
}

/// Constant point diagram over K = Delta^2 into the nerve of 0 -> 1 -> 2, along the inner horn.
std::string extend_instance()
{
    const int D = 2;
    const SimplicialSet K = standard_simplex(2, D);
    const FiniteCategory cat = ordinal_category(2);
    const SimplicialSet C = nerve(cat, D);
    const SimplicialMap i = horn_inclusion(2, 1, D);
    MappingEntry MF{K, C, 1, mapping_functor(K, C, 1)};
    const SimplicialMap g = classifying_map(C, 2, C.nondegenerate(2).front());
    const std::vector<int> fam = map_to_family(MF.functor, 0, compose(g, product_projection(point(D), K, 1)));
    const DiagramMap alpha = simplex_section(MF.functor.diagram, 0, fam);
    const SSetDiagram pulled = pullback_diagram(i, alpha.source());
    const Section omega{pulled, 0, std::vector<int>(pulled.num_objects(), 0)};
    Writer w;
    w.map(i, "i");
    w.map(compose(g, i), "f_prime");
    w.mapping(MF, "mapping");
    w.diagram(alpha.source(), "N");
    w.dmap(alpha, "alpha");
    w.section(omega, "omega");
    w.category(cat, "C_category");
    return w.str();
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures DIR\n";
        return 3;
    }
    dir = argv[1];
    std::filesystem::create_directories(dir);

    write("delta1.sset", serialize(standard_simplex(1, 2), "delta1"));
    write("delta2.sset", serialize(standard_simplex(2, 2), "delta2"));
    write("boundary2.sset", serialize(boundary(2, 2), "boundary2"));
    write("circle.sset", serialize(circle(2), "circle"));
    write("nerve_arrow.sset", serialize(nerve(arrow_category(), 3), "nerve_arrow"));
    write("horn20.sset", serialize(horn(2, 0, 2), "horn20"));
    write("ordinal2.cat", serialize(WorkspaceEntry(ordinal_category(2)), "ordinal2"));
    write("z2.cat", serialize(WorkspaceEntry(cyclic_group_category(2)), "z2"));
    write("horn21.map", serialize(WorkspaceEntry(horn_inclusion(2, 1, 2)), "horn21"));
    write("nerve_iso.marked", serialize(WorkspaceEntry(sharp(nerve(iso_pair_category(), 2))), "nerve_iso"));
    write("const_circle.diagram",
          serialize(WorkspaceEntry(constant_diagram(standard_simplex(1, 2), circle(2))), "const_circle"));

    {
        const SimplicialSet C = nerve(ordinal_category(2), 2);
        const SimplicialMap i = horn_inclusion(2, 1, 2);
        const SimplicialMap g = classifying_map(C, 2, C.nondegenerate(2).front());
        write("lift_inner_horn.lift", lift_problem(i, to_point(C), compose(g, i), to_point(i.target())));
    }
    {
        const SimplicialMap i = boundary_inclusion(1, 2);
        const SimplicialSet two = i.source();
        write("lift_none.lift",
              lift_problem(i, to_point(two), SimplicialMap::identity(two), to_point(i.target())));
    }
    write("extend_trivial.ws", extend_instance());
    write("toy.geo", serialize(WorkspaceEntry(toy_compactification()), "toy"));
    return 0;
}
