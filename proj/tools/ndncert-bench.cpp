/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */
/*
 * Copyright (c) 2026, ndncert-lite contributors.
 *
 * This file is part of ndncert-lite, a certificate management system based on NDN.
 *
 * ndncert-lite is free software: you can redistribute it and/or modify it under the terms
 * of the GNU General Public License as published by the Free Software Foundation, either
 * version 3 of the License, or (at your option) any later version.
 *
 * ndncert-lite is distributed in the hope that it will be useful, but WITHOUT ANY
 * WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
 * PARTICULAR PURPOSE.  See the GNU General Public License for more details.
 */

#include "bench-report.hpp"
#include "tool-common.hpp"

#include <fstream>
#include <iostream>

int
main(int argc, char** argv)
{
  using namespace ndncert;
  using namespace ndncert::tools;

  CLI::App app{"Packet sizes and crypto operation times for one issuance"};
  size_t runs = 1000;
  std::filesystem::path json = "bench.jsonl";
  app.add_option("--runs", runs, "timed repetitions per operation (at least 1000 for reported medians)");
  app.add_option("--json", json, "machine-readable sidecar, one record per line");

  return runTool("ndncert-bench", app, argc, argv, [&] {
    auto report = runBench(runs);
    printTable(std::cout, report);
    std::ofstream out(json);
    if (!out) {
      throw Error(ErrorCode::StorageFailure, "cannot write " + json.string());
    }
    writeJsonLines(out, report);
    return 0;
  });
}
