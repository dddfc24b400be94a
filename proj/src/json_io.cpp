#include "secorder/json_io.hpp"

#include <algorithm>
#include <memory>

#include "secorder/errors.hpp"

namespace secorder
{

using nlohmann::json;

namespace
{

std::string label_of( const json& j )
{
  if ( j.is_string() )
    return j.get<std::string>();
  if ( j.is_number_integer() )
    return std::to_string( j.get<long long>() );
  throw usage_error( "ground labels must be strings or integers, got " + j.dump() );
}

const json& member( const json& j, const char* key )
{
  if ( !j.is_object() || !j.contains( key ) )
    throw usage_error( std::string( "missing \"" ) + key + "\" in " + ( j.is_object() ? "object" : j.type_name() ) );
  return j.at( key );
}

} // namespace

json family_to_json( const SetFamily& family )
{
  json components = json::array();
  for ( const auto& comp : family.components() )
  {
    json labels = json::array();
    for ( auto a : comp )
      labels.push_back( family.ground().label( a ) );
    components.push_back( std::move( labels ) );
  }
  return json{ { "ground", family.ground().labels() }, { "components", std::move( components ) } };
}

SetFamily family_from_json( const json& j )
{
  const auto& ground_j = member( j, "ground" );
  const auto& comps_j = member( j, "components" );
  if ( !ground_j.is_array() || !comps_j.is_array() )
    throw usage_error( "\"ground\" and \"components\" must be arrays" );

  std::vector<std::string> labels;
  for ( const auto& l : ground_j )
    labels.push_back( label_of( l ) );

  std::vector<std::vector<std::string>> components;
  for ( const auto& c : comps_j )
  {
    if ( !c.is_array() )
      throw usage_error( "each component must be an array of labels" );
    std::vector<std::string> comp;
    for ( const auto& l : c )
      comp.push_back( label_of( l ) );
    components.push_back( std::move( comp ) );
  }
  return SetFamily::from_labels( std::make_shared<const GroundSet>( std::move( labels ) ), components );
}

std::pair<SetFamily, SetFamily> pair_from_json( const json& j )
{
  auto x = family_from_json( member( j, "X" ) );
  auto y = family_from_json( member( j, "Y" ) );
  if ( x.ground() == y.ground() )
  {
    SetFamily y_shared( x.ground_ptr(), y.components() );
    return { std::move( x ), std::move( y_shared ) };
  }

  auto xs = x.ground().labels();
  auto ys = y.ground().labels();
  std::sort( xs.begin(), xs.end() );
  std::sort( ys.begin(), ys.end() );
  if ( xs != ys )
    throw usage_error( "X and Y are defined over different ground sets" );

  std::vector<std::vector<std::string>> relabeled;
  for ( const auto& comp : y.components() )
  {
    std::vector<std::string> labels;
    for ( auto a : comp )
      labels.push_back( y.ground().label( a ) );
    relabeled.push_back( std::move( labels ) );
  }
  auto y_over_x = SetFamily::from_labels( x.ground_ptr(), relabeled );
  return { std::move( x ), std::move( y_over_x ) };
}

json pair_to_json( const SetFamily& x, const SetFamily& y )
{
  return json{ { "X", family_to_json( x ) }, { "Y", family_to_json( y ) } };
}

json truth_table_to_json( const BooleanFunction& f, unsigned max_width )
{
  const auto n = f.width();
  json outputs = json::array();
  for ( auto v : f.outputs( max_width ) )
    outputs.push_back( BitWord( n, v ).to_string() );
  return json{ { "n", n }, { "outputs", std::move( outputs ) } };
}

BooleanFunction truth_table_from_json( const json& j )
{
  const auto& n_j = member( j, "n" );
  if ( !n_j.is_number_unsigned() && !n_j.is_number_integer() )
    throw usage_error( "\"n\" must be an integer" );
  const auto n = n_j.get<long long>();
  if ( n < 1 || n > static_cast<long long>( max_table_width ) )
    throw usage_error( "truth table width out of range" );

  const auto& rows = j.contains( "outputs" ) ? j.at( "outputs" ) : member( j, "table" );
  if ( !rows.is_array() )
    throw usage_error( "truth table outputs must be an array" );
  std::vector<std::uint64_t> outputs;
  outputs.reserve( rows.size() );
  for ( const auto& row : rows )
  {
    if ( !row.is_string() )
      throw usage_error( "truth table rows must be bit strings" );
    const auto word = BitWord::parse( row.get<std::string>() );
    if ( word.width() != n )
      throw usage_error( "truth table row '" + word.to_string() + "' has the wrong width" );
    outputs.push_back( word.packed() );
  }
  return BooleanFunction::from_table( static_cast<unsigned>( n ), std::move( outputs ) );
}

json report_to_json( const RefutationReport& report )
{
  json failures = json::array();
  for ( const auto& p : report.failures )
    failures.push_back( p.key() );
  json witnesses = json::object();
  for ( const auto& [placement, v] : report.witnesses )
    witnesses[placement.key()] = v.to_string();
  return json{ { "m", report.m },
               { "n", report.n },
               { "pairs_checked", report.pairs_checked },
               { "placements_checked", report.placements_checked },
               { "failures", std::move( failures ) },
               { "increasing", report.increasing },
               { "contractive", report.contractive },
               { "strictly_increasing", report.strictly_increasing },
               { "witnesses", std::move( witnesses ) } };
}

} // namespace secorder
