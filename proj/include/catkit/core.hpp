#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace catkit {

enum class Errc {
  MissingComposite,
  BrokenAssociativity,
  BrokenIdentity,
  BrokenFunctoriality,
  DanglingReference,
  UnknownObject,
  SizeExceeded,
  NotParallel,
  NotIdempotent,
  NotCauchyComplete,
  TargetMismatch,
  BaseMismatch,
  SubobjectMismatch,
  NotOpenSurjection,
  NonOpenMember,
  NotRooted,
  NotACover,
  NotOpen,
  IncompatibleInputs,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingComposite: return "MissingComposite";
    case Errc::BrokenAssociativity: return "BrokenAssociativity";
    case Errc::BrokenIdentity: return "BrokenIdentity";
    case Errc::BrokenFunctoriality: return "BrokenFunctoriality";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::NotParallel: return "NotParallel";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotCauchyComplete: return "NotCauchyComplete";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::SubobjectMismatch: return "SubobjectMismatch";
    case Errc::NotOpenSurjection: return "NotOpenSurjection";
    case Errc::NonOpenMember: return "NonOpenMember";
    case Errc::NotRooted: return "NotRooted";
    case Errc::NotACover: return "NotACover";
    case Errc::NotOpen: return "NotOpen";
    case Errc::IncompatibleInputs: return "IncompatibleInputs";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Search bounds. Enumerating operations refuse inputs past these instead of
// running unbounded searches.
struct Limits {
  int max_morphisms = 64;
  int max_elements = 1 << 20;  // elements visited by a single enumeration

  void check_morphisms(int count, const char* where) const {
    if (count > max_morphisms)
      fail(Errc::SizeExceeded, std::string(where) + ": " + std::to_string(count) +
                                   " morphisms exceeds bound " + std::to_string(max_morphisms));
  }
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Keeps the smaller index as representative, so class reps are deterministic.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

// Odometer over mixed radices; yields tuples in lexicographic order.
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<int> radices)
      : radices_(std::move(radices)), digits_(radices_.size(), 0) {
    done_ = false;
    for (int r : radices_)
      if (r <= 0) done_ = true;
  }

  bool done() const { return done_; }
  const std::vector<int>& digits() const { return digits_; }

  void next() {
    for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
      if (++digits_[i] < radices_[i]) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<int> radices_;
  std::vector<int> digits_;
  bool done_;
};

}  // namespace catkit
