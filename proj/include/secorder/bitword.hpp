#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace secorder
{

/*! \brief Element of the boolean lattice B^n, 1 <= n <= 62.

  Coordinates are addressed by zero-based position, position 0 being the
  leftmost character of the textual rendering ("0110"). The packed value is
  the textual rendering read as a binary number, so position p lives at bit
  (width - 1 - p) and all bits at or above `width` are zero.
*/
class BitWord
{
public:
  static constexpr unsigned max_width = 62;

  /// Zero-width placeholder; only useful as a container default.
  constexpr BitWord() noexcept = default;

  BitWord( unsigned width, std::uint64_t packed );

  static BitWord zero( unsigned width ) { return BitWord( width, 0 ); }
  static BitWord ones( unsigned width );
  static BitWord unit( unsigned width, unsigned pos );

  /// Parses a '0'/'1' string, leftmost character is position 0.
  static BitWord parse( std::string_view text );

  constexpr unsigned width() const noexcept { return width_; }
  constexpr std::uint64_t packed() const noexcept { return bits_; }

  bool test( unsigned pos ) const;
  BitWord with( unsigned pos ) const;
  BitWord without( unsigned pos ) const;

  std::string to_string() const;

  friend constexpr bool operator==( const BitWord&, const BitWord& ) noexcept = default;
  friend constexpr std::strong_ordering operator<=>( const BitWord& a, const BitWord& b ) noexcept
  {
    if ( auto c = a.width_ <=> b.width_; c != 0 )
      return c;
    return a.bits_ <=> b.bits_;
  }

private:
  std::uint64_t mask_of( unsigned pos ) const;

  std::uint64_t bits_ = 0;
  unsigned width_ = 0;
};

/// Mask with the low `width` bits set.
constexpr std::uint64_t width_mask( unsigned width ) noexcept
{
  return width >= 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << width ) - 1;
}

/// Packed bit for position `pos` in a word of `width` coordinates.
constexpr std::uint64_t position_bit( unsigned width, unsigned pos ) noexcept
{
  return std::uint64_t{ 1 } << ( width - 1 - pos );
}

inline unsigned weight( const BitWord& u ) noexcept
{
  return static_cast<unsigned>( std::popcount( u.packed() ) );
}

BitWord join( const BitWord& u, const BitWord& v );
BitWord meet( const BitWord& u, const BitWord& v );
bool leq( const BitWord& u, const BitWord& v );

/// Words obtained from `u` by raising exactly one 0-bit, leftmost position first.
std::vector<BitWord> successors( const BitWord& u );

/*! \brief All words of width n and weight w, in ascending packed value.

  Generated with Gosper's next-combination step; the range is lazy and can be
  iterated any number of times.
*/
class Combinations
{
public:
  class iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = BitWord;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = BitWord;

    iterator() = default;
    iterator( unsigned width, std::uint64_t current, std::uint64_t limit, bool done )
        : width_( width ), current_( current ), limit_( limit ), done_( done )
    {
    }

    BitWord operator*() const { return BitWord( width_, current_ ); }
    std::uint64_t packed() const noexcept { return current_; }

    iterator& operator++()
    {
      if ( current_ == 0 )
      {
        done_ = true;
        return *this;
      }
      const auto low = current_ & ( ~current_ + 1 );
      const auto ripple = current_ + low;
      const auto next = ( ( ( ripple ^ current_ ) >> 2 ) / low ) | ripple;
      if ( next >= limit_ )
        done_ = true;
      else
        current_ = next;
      return *this;
    }
    iterator operator++( int )
    {
      auto copy = *this;
      ++*this;
      return copy;
    }

    friend bool operator==( const iterator& a, const iterator& b ) noexcept
    {
      if ( a.done_ || b.done_ )
        return a.done_ == b.done_;
      return a.current_ == b.current_;
    }

  private:
    unsigned width_ = 0;
    std::uint64_t current_ = 0;
    std::uint64_t limit_ = 0;
    bool done_ = true;
  };

  Combinations( unsigned width, unsigned weight );

  iterator begin() const;
  iterator end() const { return {}; }

  unsigned width() const noexcept { return width_; }
  unsigned weight() const noexcept { return weight_; }

private:
  unsigned width_;
  unsigned weight_;
};

inline Combinations combinations( unsigned width, unsigned weight )
{
  return Combinations( width, weight );
}

/// Binomial coefficient, exact for the widths used here (n <= 62).
std::uint64_t binomial( unsigned n, unsigned k );

} // namespace secorder
