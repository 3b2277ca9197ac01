#pragma once
// Shared corpus of intersection arrays of known distance-regular graphs.
// Every entry is realizable, so spectral feasibility, Krein nonnegativity,
// and the bound/light-tail equivalence must all hold on each of them.

#include <string>
#include <vector>

#include <drg/geometric.hpp>
#include <drg/intersection_array.hpp>

namespace corpus {

inline std::vector<drg::IntersectionArray> arrays() {
    std::vector<drg::IntersectionArray> out;
    // Hermitian dual polar graphs, both orders, diameters 2..4
    for (int D = 2; D <= 4; ++D)
        for (long long r : {2, 3}) out.push_back(drg::hermitian_dual_polar_array(D, r));
    // Hamming graphs H(D,3) and hypercubes H(D,2)
    auto hamming = [](int D, long long q) {
        std::vector<long long> b, c;
        for (int i = 0; i < D; ++i) b.push_back((D - i) * (q - 1));
        for (int i = 1; i <= D; ++i) c.push_back(i);
        return drg::IntersectionArray::from_bc(b, c);
    };
    for (int D = 2; D <= 4; ++D) out.push_back(hamming(D, 3));
    for (int D = 3; D <= 6; ++D) out.push_back(hamming(D, 2));
    out.push_back(hamming(2, 4));
    for (const char* text : {
             "3,2;1,1",            // Petersen
             "2,1;1,1",            // pentagon
             "2,1,1;1,1,1",        // heptagon
             "5,2,1;1,2,5",        // icosahedron
             "4,1;1,4",            // octahedron
             "3,2;1,3",            // K_{3,3}
             "3;1",                // K_4
             "6,2;1,4",            // triangular graph T(5)
             "9,4,1;1,4,9",        // Johnson J(6,3)
             "3,2,2;1,1,3",        // Heawood
             "3,2,2,1;1,1,2,3",    // Pappus
             "3,2,2,1,1;1,1,2,2,3",// Desargues
             "3,2,1,1,1;1,1,1,2,3",// dodecahedron
             "16,5;1,8",           // Schlafli
             "27,10,1;1,10,27",    // Gosset
             "7,6;1,1",            // Hoffman-Singleton
             "10,9;1,2",           // Gewirtz
             "22,21;1,6",          // Higman-Sims
             "5,4;1,2",            // Clebsch (folded 5-cube)
             "6,3;1,3",            // Paley graph on 13 vertices
             "15,6,1;1,6,15",      // halved 6-cube
             "4,3,3;1,1,2",        // odd graph O_4
         })
        out.push_back(drg::IntersectionArray::parse(text));
    return out;
}

}  // namespace corpus
