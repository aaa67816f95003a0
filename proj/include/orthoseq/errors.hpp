#pragma once

#include <stdexcept>
#include <string>

namespace orthoseq {

#define ORTHOSEQ_ERROR(Name, Base)                                   \
    struct Name : Base {                                             \
        explicit Name(const std::string& what) : Base(what) {}       \
    }

// gf2field
ORTHOSEQ_ERROR(UnsupportedDegree, std::invalid_argument);
ORTHOSEQ_ERROR(NonPrimitivePolynomial, std::invalid_argument);
ORTHOSEQ_ERROR(DlogOfZero, std::domain_error);

// boolfun
ORTHOSEQ_ERROR(LengthMismatch, std::invalid_argument);
ORTHOSEQ_ERROR(IndexOutOfRange, std::out_of_range);

// constructions
ORTHOSEQ_ERROR(BadPartition, std::invalid_argument);
ORTHOSEQ_ERROR(FieldMismatch, std::invalid_argument);
ORTHOSEQ_ERROR(ZeroCombination, std::invalid_argument);
ORTHOSEQ_ERROR(UnknownId, std::invalid_argument);
ORTHOSEQ_ERROR(BadParameters, std::invalid_argument);
ORTHOSEQ_ERROR(ConstructionFailed, std::logic_error);

// ortho
ORTHOSEQ_ERROR(SamePair, std::invalid_argument);

// hexassign
ORTHOSEQ_ERROR(UnknownLayout, std::invalid_argument);
ORTHOSEQ_ERROR(UnresolvedSetId, std::invalid_argument);
ORTHOSEQ_ERROR(RuleFails, std::runtime_error);

// window
ORTHOSEQ_ERROR(BadOrder, std::invalid_argument);

// io
ORTHOSEQ_ERROR(ParseError, std::invalid_argument);

#undef ORTHOSEQ_ERROR

}  // namespace orthoseq
