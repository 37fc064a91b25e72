#pragma once

// CSV and JSON writers for every file the CLI produces. Numbers are written
// with 9 significant digits so repeated runs are byte-identical; the JSON
// writers emit the same rounded values as the CSV writers.

#include <ostream>
#include <span>
#include <string>

#include "hrvtvm/analysis.hpp"
#include "hrvtvm/sodp.hpp"
#include "hrvtvm/tvm.hpp"

namespace hrvtvm {

enum class OutputFormat { Csv, Json };

/// printf "%.9g".
std::string format_number(double value);

/// Header: index,x,y,quadrant
void write_sodp_points(std::ostream& out, std::span<const SodpPoint> points, OutputFormat format);
/// Header: index,x,y,d_co,le,l,z,quadrant
void write_tvm_points(std::ostream& out, std::span<const TvmPoint> points, OutputFormat format);

/// Header: source_id,ctm,cctm1,cctm2,cctm3,cctm4,d,etv,etv1,etv2,etv3,etv4,r_ctm,r_d,nx,ny,nz
/// An absent d is an empty field (null in JSON).
void write_reports(std::ostream& out, std::span<const IndicatorReport> reports,
                   OutputFormat format);

/// Long format. Header: dataset,indicator,r,value
void write_sweep(std::ostream& out, const SweepTable& table, OutputFormat format);

/// Header: dataset,indicator,n,missing,mean,std,min,q1,median,q3,max,values
/// where `values` is the ';'-joined raw data behind the box.
void write_aggregates(std::ostream& out, std::span<const GroupAggregate> aggregates,
                      OutputFormat format);

struct ClassificationRow {
  std::string pair;  // "<a>:<b>"
  Indicator indicator = Indicator::Ctm;
  double ri = 0.0;
};

/// Header: pair,indicator,ri
void write_classification(std::ostream& out, std::span<const ClassificationRow> rows,
                          OutputFormat format);

}  // namespace hrvtvm
