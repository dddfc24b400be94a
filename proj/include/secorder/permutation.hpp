#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "secorder/bitword.hpp"

namespace secorder
{

/*! \brief A bijection sigma of {0, ..., n-1}.

  Acts on the left on n-tuples by moving the entry at index i to index
  sigma(i), i.e. (sigma . a)_j = a_{sigma^-1(j)}.
*/
class Permutation
{
public:
  Permutation() = default;

  /// `images[i]` is sigma(i); throws usage_error unless it is a bijection.
  explicit Permutation( std::vector<std::size_t> images );

  static Permutation identity( std::size_t n );
  static Permutation transposition( std::size_t n, std::size_t i, std::size_t j );

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()( std::size_t i ) const { return images_.at( i ); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;

  /// sigma.after(tau) is sigma o tau (tau applied first).
  Permutation after( const Permutation& tau ) const;

  /// Coordinate action on words: bit at position i moves to position sigma(i).
  BitWord act( const BitWord& u ) const;

  template<typename T>
  std::vector<T> act( const std::vector<T>& tuple ) const
  {
    std::vector<T> out( tuple.size() );
    for ( std::size_t i = 0; i < tuple.size(); ++i )
      out[images_.at( i )] = tuple[i];
    return out;
  }

  bool is_identity() const noexcept;

  /// One-based rendering "(2 1 3)" listing sigma(1), ..., sigma(n).
  std::string to_string() const;

  friend bool operator==( const Permutation&, const Permutation& ) = default;

  /// Every permutation of {0..n-1} in lexicographic order of images.
  static std::vector<Permutation> all( std::size_t n );

private:
  std::vector<std::size_t> images_;
};

} // namespace secorder
