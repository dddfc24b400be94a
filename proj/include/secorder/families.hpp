#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "secorder/bitword.hpp"
#include "secorder/permutation.hpp"

namespace secorder
{

using ElementId = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using Subset = std::vector<ElementId>;

/// Default bound on the product of component sizes for brute-force section enumeration.
inline constexpr std::uint64_t default_enumeration_cap = 1'000'000;

/// Default bound on n for canonical_family.
inline constexpr unsigned default_canonical_width = 16;

/// Finite ground set N with opaque string labels mapped to dense indices 0..c-1.
class GroundSet
{
public:
  explicit GroundSet( std::vector<std::string> labels );

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label( ElementId a ) const { return labels_.at( a ); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<ElementId> find( std::string_view label ) const;

  /// Throws usage_error for unknown labels.
  ElementId index_of( std::string_view label ) const;

  friend bool operator==( const GroundSet& a, const GroundSet& b ) { return a.labels_ == b.labels_; }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> index_;
};

/// Ground set with labels "1", "2", ..., "c".
std::shared_ptr<const GroundSet> numbered_ground( std::size_t c );

/*! \brief An n-tuple (F_1, ..., F_n) of subsets of a ground set.

  Empty components are allowed so that lifted functions can be represented;
  section and order operations reject them. The characteristic word of each
  element is cached at construction, which caps the arity at
  BitWord::max_width.
*/
class SetFamily
{
public:
  SetFamily( std::shared_ptr<const GroundSet> ground, std::vector<Subset> components );

  static SetFamily from_labels( std::shared_ptr<const GroundSet> ground,
                                const std::vector<std::vector<std::string>>& components );

  unsigned arity() const noexcept { return static_cast<unsigned>( components_.size() ); }
  const GroundSet& ground() const noexcept { return *ground_; }
  const std::shared_ptr<const GroundSet>& ground_ptr() const noexcept { return ground_; }

  const Subset& component( std::size_t i ) const { return components_.at( i ); }
  const std::vector<Subset>& components() const noexcept { return components_; }

  bool all_nonempty() const noexcept { return all_nonempty_; }
  bool contains( std::size_t i, ElementId a ) const;

  /// Packed characteristic word of element `a` (bit for position i set iff a in F_i).
  std::uint64_t chi_packed( ElementId a ) const { return chi_.at( a ); }

  /// Same family with components reordered: result_{sigma(i)} = F_i.
  SetFamily permuted( const Permutation& sigma ) const;

  /// Drops component i (n >= 2).
  SetFamily without_component( std::size_t i ) const;

  friend bool operator==( const SetFamily& a, const SetFamily& b )
  {
    return *a.ground_ == *b.ground_ && a.components_ == b.components_;
  }

private:
  std::shared_ptr<const GroundSet> ground_;
  std::vector<Subset> components_;
  std::vector<std::uint64_t> chi_;
  bool all_nonempty_ = true;
};

/// Canonical sorted representative of an n-multiset of ground elements.
class Section
{
public:
  Section() = default;
  explicit Section( std::vector<ElementId> elements );

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }

  friend bool operator==( const Section&, const Section& ) = default;
  friend auto operator<=>( const Section&, const Section& ) = default;

private:
  std::vector<ElementId> elements_;
};

/// A set of sections of a common arity.
struct SectionSet
{
  std::size_t arity = 0;
  std::set<Section> sections;

  std::size_t size() const noexcept { return sections.size(); }
  bool contains( const Section& s ) const { return sections.count( s ) != 0; }

  friend bool operator==( const SectionSet&, const SectionSet& ) = default;
};

/// "[1,3]" using ground labels.
std::string render( const Section& s, const GroundSet& ground );

BitWord chi( ElementId a, const SetFamily& family );
BitWord chi( std::string_view label, const SetFamily& family );

/// Product of component sizes, saturating at UINT64_MAX.
std::uint64_t product_size( const SetFamily& family );

/// Throws domain_error if some component is empty.
void require_nonempty( const SetFamily& family );

/// Sec(F): every sorted tuple picking one element per component.
SectionSet enumerate_sections( const SetFamily& family, std::uint64_t cap = default_enumeration_cap );

/// Decides s in Sec(F) by bipartite perfect matching between tuple slots and components.
bool is_section( const Section& s, const SetFamily& family );

/// T / Z: the (n-1)-multisets t such that [a] + t lies in T for every a in Z.
SectionSet divide( const SectionSet& sections, const Subset& z );

/// Components sorted by (cardinality, index list); equal iff the families differ by a permutation.
std::vector<Subset> canonical_form( const SetFamily& family );

/*! \brief Family over B^n minus the zero word whose characteristic map is the identity.

  Element labels are the textual renderings of the nonzero words, in ascending
  packed order; component i holds the words with a 1 at position i.
*/
SetFamily canonical_family( unsigned n, unsigned max_n = default_canonical_width );

} // namespace secorder
