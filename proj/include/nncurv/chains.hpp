#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nncurv/algebra.hpp"

namespace nncurv {

enum class ExpectedTag { SymmetricPair, Fails, HoldsProved, HoldsConjectured };

const char* expectedName(ExpectedTag t);

// Ambient involutive isometry whose fixed set is the middle algebra; carried
// by chains that admit the direct constructive route.
struct Involution {
    enum class Kind { EntryConjugation, AdMatrix };
    Kind kind = Kind::EntryConjugation;
    Mat m;  // unitary, for AdMatrix

    Mat apply(const Mat& x) const;
};

struct Chain {
    std::string id;
    std::string summary;  // "h < k < g" in standard names
    Field field = Field::Real;
    std::size_t ambient = 0;
    Basis g, k, h;  // orthonormal, nested
    ExpectedTag expected = ExpectedTag::Fails;
    std::optional<Involution> sigma;
    Basis pinnedTorus;  // torus inside the complement of k, for the sigma route
    std::optional<std::pair<Mat, Mat>> knownPair;
};

struct CatalogRow {
    std::string id;
    std::string expected;
    std::string summary;
};

const std::vector<std::string>& catalogIds();
std::vector<CatalogRow> listCatalog();

// Throws std::invalid_argument on unknown id, ConstructionError when a
// recipe's structural checks fail.
Chain buildChain(const std::string& id);

// Matrix with the entries of small scattered to the listed ambient rows and
// columns.
Mat embedAt(const Mat& small, std::size_t ambient,
            const std::vector<std::size_t>& coords);
Basis embedAllAt(const Basis& b, std::size_t ambient,
                 const std::vector<std::size_t>& coords);

// Complex structure on R^{2n} with 2x2 rotation blocks down the diagonal.
Mat interleavedJ(std::size_t twoN);

}  // namespace nncurv
