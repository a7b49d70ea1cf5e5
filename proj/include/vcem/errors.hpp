#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vcem {

// Base for all typed errors raised by the library. Subclasses carry the
// fields a caller needs to report or branch on; what() is a rendered message.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidArg : Error {
    explicit InvalidArg(const std::string& msg) : Error("invalid argument: " + msg) {}
};

struct IoError : Error {
    std::string path;
    IoError(std::string p, const std::string& msg)
        : Error("io error: " + p + ": " + msg), path(std::move(p)) {}
};

// ---- dataset loading ----

struct MalformedLine : Error {
    std::size_t line_no;
    explicit MalformedLine(std::size_t line)
        : Error("malformed line " + std::to_string(line)), line_no(line) {}
};

struct DimensionMismatch : Error {
    std::size_t line_no;
    std::size_t expected, got;
    DimensionMismatch(std::size_t line, std::size_t exp, std::size_t g)
        : Error("dimension mismatch at line " + std::to_string(line) + ": expected " +
                std::to_string(exp) + ", got " + std::to_string(g)),
          line_no(line), expected(exp), got(g) {}
};

struct DuplicateId : Error {
    std::string id;
    explicit DuplicateId(std::string dup)
        : Error("duplicate id: " + dup), id(std::move(dup)) {}
};

struct NonFiniteValue : Error {
    std::size_t line_no = 0;  // jsonl loads
    std::size_t row = 0, col = 0;  // matrix loads
    explicit NonFiniteValue(std::size_t line)
        : Error("non-finite value at line " + std::to_string(line)), line_no(line) {}
    NonFiniteValue(std::size_t r, std::size_t c)
        : Error("non-finite value at row " + std::to_string(r) + ", col " + std::to_string(c)),
          row(r), col(c) {}
};

struct BadMagic : Error {
    BadMagic() : Error("bad magic: not a VCEM1 file") {}
};

struct TruncatedFile : Error {
    std::uint64_t expected_bytes, got_bytes;
    TruncatedFile(std::uint64_t exp, std::uint64_t got)
        : Error("file size mismatch: expected " + std::to_string(exp) + " bytes, got " +
                std::to_string(got)),
          expected_bytes(exp), got_bytes(got) {}
};

// ---- difficulty / coreset ----

struct MissingLosses : Error {
    std::string id;
    explicit MissingLosses(std::string rec_id)
        : Error("record has neither step losses nor a difficulty value: " + rec_id),
          id(std::move(rec_id)) {}
};

struct TooFewNodes : Error {
    std::size_t n, k;
    TooFewNodes(std::size_t n_, std::size_t k_)
        : Error("need k < n for a k-NN graph: n=" + std::to_string(n_) +
                ", k=" + std::to_string(k_)),
          n(n_), k(k_) {}
};

struct LengthMismatch : Error {
    std::size_t expected, got;
    LengthMismatch(std::size_t exp, std::size_t g)
        : Error("length mismatch: expected " + std::to_string(exp) + ", got " +
                std::to_string(g)),
          expected(exp), got(g) {}
};

struct BudgetOutOfRange : Error {
    std::size_t budget, n;
    BudgetOutOfRange(std::size_t b, std::size_t n_)
        : Error("budget out of range: " + std::to_string(b) + " of n=" + std::to_string(n_)),
          budget(b), n(n_) {}
};

// ---- flow / caching ----

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

struct NonFiniteState : Error {
    std::size_t step;
    explicit NonFiniteState(std::size_t s)
        : Error("state left the finite range at step " + std::to_string(s)), step(s) {}
};

struct DivergedTraining : Error {
    DivergedTraining() : Error("training loss became non-finite") {}
};

struct EmptySeries : Error {
    EmptySeries() : Error("smoothness series is empty") {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

}  // namespace vcem
