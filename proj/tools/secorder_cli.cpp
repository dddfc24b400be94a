#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secorder/counterexample.hpp"
#include "secorder/errors.hpp"
#include "secorder/json_io.hpp"
#include "secorder/order.hpp"
#include "secorder/random.hpp"

using namespace secorder;
using nlohmann::json;

namespace
{

enum exit_code : int
{
  exit_holds = 0,
  exit_fails = 1,
  exit_input = 2,
  exit_alarm = 3,
};

/// Raised when two independent computations of the same fact disagree.
struct consistency_alarm : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct GlobalOptions
{
  std::uint64_t cap_product = default_enumeration_cap;
  unsigned max_width = default_sweep_width;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string output;

  OrderLimits limits() const { return OrderLimits{ cap_product, max_width }; }
  bool as_json() const { return format == "json"; }
};

json read_json( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw usage_error( "cannot open '" + path + "'" );
  try
  {
    return json::parse( in );
  }
  catch ( const json::parse_error& e )
  {
    throw usage_error( "'" + path + "' is not valid JSON: " + e.what() );
  }
}

class Writer
{
public:
  explicit Writer( const std::string& path )
  {
    if ( !path.empty() )
    {
      file_.open( path );
      if ( !file_ )
        throw usage_error( "cannot write '" + path + "'" );
    }
  }

  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string yes_no( bool b )
{
  return b ? "true" : "false";
}

int cmd_check( const GlobalOptions& opt, const std::string& path )
{
  const auto [x, y] = pair_from_json( read_json( path ) );
  const auto limits = opt.limits();
  const bool xy = fast_check( x, y, limits );
  const bool yx = fast_check( y, x, limits );
  const auto sigma = equiv_check( x, y );
  if ( sigma && !( xy && yx ) )
    throw consistency_alarm( "equivalent families were reported as incomparable" );

  Writer w( opt.output );
  if ( opt.as_json() )
  {
    json j{ { "x_le_y", xy }, { "y_le_x", yx }, { "equivalent", sigma.has_value() } };
    if ( sigma )
      j["sigma"] = sigma->to_string();
    w.out() << j.dump( 2 ) << '\n';
  }
  else
  {
    w.out() << "X ⊑ Y: " << yes_no( xy ) << ", Y ⊑ X: " << yes_no( yx ) << ", X ≡ Y: " << yes_no( sigma.has_value() );
    if ( sigma )
      w.out() << ", σ = " << sigma->to_string();
    w.out() << '\n';
  }
  return xy ? exit_holds : exit_fails;
}

int cmd_sections( const GlobalOptions& opt, const std::string& path )
{
  const auto family = family_from_json( read_json( path ) );
  const auto sections = enumerate_sections( family, opt.cap_product );

  Writer w( opt.output );
  if ( opt.as_json() )
  {
    json list = json::array();
    for ( const auto& s : sections.sections )
    {
      json labels = json::array();
      for ( auto a : s.elements() )
        labels.push_back( family.ground().label( a ) );
      list.push_back( std::move( labels ) );
    }
    w.out() << json{ { "arity", sections.arity }, { "count", sections.size() }, { "sections", std::move( list ) } }.dump( 2 )
            << '\n';
  }
  else
  {
    for ( const auto& s : sections.sections )
      w.out() << render( s, family.ground() ) << '\n';
    w.out() << sections.size() << ( sections.size() == 1 ? " section" : " sections" ) << '\n';
  }
  return exit_holds;
}

int cmd_witness( const GlobalOptions& opt, const std::string& path )
{
  const auto [x, y] = pair_from_json( read_json( path ) );
  const auto f = witness( x, y, opt.limits() );

  Writer w( opt.output );
  if ( !f )
  {
    if ( opt.as_json() )
      w.out() << json{ { "witness", nullptr }, { "message", "no witness (X ⋢ Y)" } }.dump( 2 ) << '\n';
    else
      w.out() << "no witness (X ⋢ Y)\n";
    return exit_fails;
  }
  if ( !is_increasing( *f, opt.max_width ) || !is_contractive( *f, opt.max_width ) ||
       !pointwise_included( x, lift( *f, y ) ) )
    throw consistency_alarm( "witness fails its own certificate" );
  w.out() << truth_table_to_json( *f, opt.max_width ).dump( 2 ) << '\n';
  return exit_holds;
}

int cmd_analyze( const GlobalOptions& opt, const std::string& path )
{
  const auto f = truth_table_from_json( read_json( path ) );
  const auto n = f.width();
  if ( n > opt.max_width )
    throw resource_error( "truth table width exceeds --max-width" );

  const bool increasing = is_increasing( f, opt.max_width );
  const bool contractive = is_contractive( f, opt.max_width );
  std::optional<Permutation> tau;
  if ( increasing && contractive )
    tau = as_permutation( f, opt.max_width );

  using ordered = nlohmann::ordered_json;
  ordered j{ { "n", n },
             { "increasing", increasing },
             { "contractive", contractive },
             { "strictly_increasing", is_strictly_increasing( f, opt.max_width ) },
             { "bijective", is_bijective( f, opt.max_width ) },
             { "injective_on_units", is_injective_on_units( f ) },
             { "permutation", tau ? ordered( tau->to_string() ) : ordered( nullptr ) } };

  Writer w( opt.output );
  if ( opt.as_json() )
    w.out() << j.dump( 2 ) << '\n';
  else
    for ( const auto& [key, value] : j.items() )
      w.out() << key << ": " << ( value.is_string() ? value.get<std::string>() : value.dump() ) << '\n';
  return exit_holds;
}

int cmd_refute( const GlobalOptions& opt, unsigned m, std::optional<unsigned> n )
{
  const auto report = refute_arity( m, n, opt.max_width );

  Writer w( opt.output );
  if ( opt.as_json() )
    w.out() << report_to_json( report ).dump( 2 ) << '\n';
  else
  {
    w.out() << "m = " << report.m << ", n = " << report.n << '\n'
            << "pairs checked: " << report.pairs_checked << ", placements checked: " << report.placements_checked << '\n'
            << "increasing: " << yes_no( report.increasing ) << ", contractive: " << yes_no( report.contractive )
            << ", strictly increasing: " << yes_no( report.strictly_increasing ) << '\n'
            << "failures: " << report.failures.size() << '\n';
    for ( const auto& p : report.failures )
      w.out() << "  " << p.key() << '\n';
  }
  return report.valid() ? exit_holds : exit_fails;
}

struct BenchRow
{
  unsigned n = 0;
  std::size_t c = 0;
  unsigned trials = 0;
  double fast_ms = 0;
  double naive_ms = 0;
  unsigned compared = 0;
  unsigned agreed = 0;
  unsigned skipped = 0;
  unsigned holds = 0;
};

int cmd_bench( const GlobalOptions& opt, const std::vector<unsigned>& ns, const std::vector<std::size_t>& cs, unsigned trials )
{
  using clock = std::chrono::steady_clock;
  auto ms_since = []( clock::time_point t0 ) {
    return std::chrono::duration<double, std::milli>( clock::now() - t0 ).count();
  };

  std::vector<BenchRow> rows;
  bool disagreement = false;
  if ( trials > 0 )
    for ( auto n : ns )
      for ( auto c : cs )
      {
        if ( n < 1 || c < 1 )
          throw usage_error( "bench sizes must be positive" );
        // Each (n, c) cell has its own stream so rows can be reproduced in isolation.
        std::seed_seq seq{ static_cast<std::uint32_t>( opt.seed ), static_cast<std::uint32_t>( opt.seed >> 32 ), n,
                           static_cast<std::uint32_t>( c ) };
        Rng rng( seq );
        BenchRow row{ n, c, trials };
        for ( unsigned t = 0; t < trials; ++t )
        {
          const auto [x, y] = random_pair( rng, c, n );
          auto t0 = clock::now();
          const bool fast = fast_check( x, y, opt.limits() );
          row.fast_ms += ms_since( t0 );
          row.holds += fast;
          if ( product_size( x ) > opt.cap_product )
          {
            ++row.skipped;
            continue;
          }
          t0 = clock::now();
          const bool naive = naive_check( x, y, opt.limits() );
          row.naive_ms += ms_since( t0 );
          ++row.compared;
          row.agreed += fast == naive;
          disagreement = disagreement || fast != naive;
        }
        rows.push_back( row );
      }

  Writer w( opt.output );
  if ( opt.as_json() )
  {
    json list = json::array();
    for ( const auto& r : rows )
      list.push_back( json{ { "n", r.n },
                            { "c", r.c },
                            { "trials", r.trials },
                            { "holds", r.holds },
                            { "fast_ms", r.fast_ms },
                            { "naive_ms", r.compared ? json( r.naive_ms ) : json( nullptr ) },
                            { "compared", r.compared },
                            { "agreed", r.agreed },
                            { "oracle_skipped", r.skipped } } );
    w.out() << json{ { "seed", opt.seed }, { "rows", std::move( list ) } }.dump( 2 ) << '\n';
  }
  else
  {
    w.out() << "n\tc\ttrials\tholds\tfast_ms\tnaive_ms\tagreement\n";
    for ( const auto& r : rows )
    {
      std::ostringstream naive, agreement;
      if ( r.compared )
        naive << r.naive_ms;
      else
        naive << '-';
      agreement << r.agreed << '/' << r.compared;
      if ( r.skipped )
        agreement << " (" << r.skipped << " oracle-skipped)";
      w.out() << r.n << '\t' << r.c << '\t' << r.trials << '\t' << r.holds << '\t' << r.fast_ms << '\t' << naive.str()
              << '\t' << agreement.str() << '\n';
    }
  }
  if ( disagreement )
  {
    std::cerr << "error: fast and naive checks disagree\n";
    return exit_alarm;
  }
  return exit_holds;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Section preorder on families of sets, witness functions, and the contractive-function counterexample" };
  app.require_subcommand( 1 );

  GlobalOptions opt;
  app.add_option( "--cap-product", opt.cap_product, "Largest product of component sizes the enumerating checker will accept" )
      ->check( CLI::PositiveNumber );
  app.add_option( "--max-width", opt.max_width, "Largest n for exhaustive sweeps over B^n" )->check( CLI::Range( 1u, max_table_width ) );
  app.add_option( "--seed", opt.seed, "Seed for random instances" );
  app.add_option( "--format", opt.format, "Output format" )->check( CLI::IsMember( { "json", "text" } ) );
  app.add_option( "--output", opt.output, "Write to PATH instead of standard output" );

  std::string path;
  auto* check = app.add_subcommand( "check", "Decide X [= Y, Y [= X and X = Y up to reordering for a pair file" );
  check->add_option( "pair", path, "JSON file {\"X\": family, \"Y\": family}" )->required();

  auto* sections = app.add_subcommand( "sections", "List the unordered sections of a family" );
  sections->add_option( "family", path, "JSON file {\"ground\": [...], \"components\": [[...], ...]}" )->required();

  auto* witness_cmd = app.add_subcommand( "witness", "Print the least increasing contractive f with X contained in lift(f, Y)" );
  witness_cmd->add_option( "pair", path, "JSON pair file" )->required();

  auto* analyze = app.add_subcommand( "analyze", "Report predicates of a truth table" );
  analyze->add_option( "table", path, "JSON file {\"n\": n, \"outputs\": [...]}" )->required();

  unsigned m = 2;
  std::optional<unsigned> n_override;
  auto* refute = app.add_subcommand( "refute", "Check that the counterexample separates every placement of an arity-m cell" );
  refute->add_option( "--m", m, "Cell arity" )->required();
  refute->add_option( "--n", n_override, "Word width (default 2^(m+1)+4)" );

  std::vector<unsigned> bench_n{ 3 };
  std::vector<std::size_t> bench_c{ 3 };
  unsigned trials = 100;
  auto* bench = app.add_subcommand( "bench", "Time the sweep checker against the enumerating checker on random pairs" );
  bench->add_option( "--n", bench_n, "Arities" )->delimiter( ',' );
  bench->add_option( "--c", bench_c, "Ground set sizes" )->delimiter( ',' );
  bench->add_option( "--trials", trials, "Pairs per (n, c)" );

  // Options given after the subcommand name belong to the main app as well.
  for ( auto* sub : { check, sections, witness_cmd, analyze, refute, bench } )
    sub->fallthrough();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? exit_holds : exit_input;
  }

  try
  {
    if ( *check )
      return cmd_check( opt, path );
    if ( *sections )
      return cmd_sections( opt, path );
    if ( *witness_cmd )
      return cmd_witness( opt, path );
    if ( *analyze )
      return cmd_analyze( opt, path );
    if ( *refute )
      return cmd_refute( opt, m, n_override );
    if ( *bench )
      return cmd_bench( opt, bench_n, bench_c, trials );
  }
  catch ( const consistency_alarm& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_alarm;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
