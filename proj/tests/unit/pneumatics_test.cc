// Copyright 2026 The BHG Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bhg/control.h"
#include "bhg/error.h"
#include "bhg/pneumatics.h"
#include "bhg/tracking.h"

namespace bhg::pneumatics {
namespace {

PneumaticState rest(double tank, double chambers = 0.0) {
  std::array<double, kChamberCount> p;
  p.fill(chambers);
  return PneumaticState::at_rest(PlantParams{}, tank, p);
}

// Exact solution of one chamber filling from the tank (pump off):
// the pressure difference decays with rate c_in * (1/Vc + 1/Vt).
double inflate_exact(const PlantParams& pl, double pt0, double pc0, double t) {
  const double total = pt0 * pl.tank_volume + pc0 * pl.chamber_volume;
  const double p_eq = total / (pl.tank_volume + pl.chamber_volume);
  const double rate = pl.inflow_coeff * (1.0 / pl.chamber_volume + 1.0 / pl.tank_volume);
  return p_eq + (pc0 - p_eq) * std::exp(-rate * t);
}

// Fine-step reference: explicit integration of the same ODE at dt / 100.
double inflate_fine(const PlantParams& pl, double pt, double pc, double dt) {
  const double h = dt / 100.0;
  for (int i = 0; i < 100; ++i) {
    const double flow = pl.inflow_coeff * std::max(0.0, pt - pc) * h;
    pt -= flow / pl.tank_volume;
    pc += flow / pl.chamber_volume;
  }
  return pc;
}

TEST(BangBang, Examples) {
  const ControllerConfig cfg{2.0, 0.001};
  EXPECT_EQ(bang_bang_controller(40, 40, cfg), Valve::kClosed);
  EXPECT_EQ(bang_bang_controller(40, 30, cfg), Valve::kInflate);
  EXPECT_EQ(bang_bang_controller(40, 43, cfg), Valve::kExhaust);
  EXPECT_EQ(bang_bang_controller(40, 38, cfg), Valve::kClosed);
  EXPECT_EQ(bang_bang_controller(40, 42, cfg), Valve::kClosed);
}

TEST(BangBang, PureFunction) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 80);
  const ControllerConfig cfg;
  for (int i = 0; i < 1000; ++i) {
    const double r = u(rng), m = u(rng);
    EXPECT_EQ(bang_bang_controller(r, m, cfg), bang_bang_controller(r, m, cfg));
  }
}

TEST(StepPlant, LockedAndPumpOffOnlyAdvancesTime) {
  auto s = rest(80.0, 25.0);
  for (auto& v : s.valves) v = Valve::kLocked;
  const auto n = step_plant(s, 0.001, PlantParams{});
  EXPECT_EQ(n.tank_gas, s.tank_gas);
  EXPECT_EQ(n.tank_pressure, s.tank_pressure);
  EXPECT_EQ(n.chamber_gas, s.chamber_gas);
  EXPECT_EQ(n.chamber_pressures, s.chamber_pressures);
  EXPECT_DOUBLE_EQ(n.time, 0.001);
}

TEST(StepPlant, InflateRaisesChamberAndConservesGas) {
  auto s = rest(60.0);
  s.valves[3] = Valve::kInflate;
  const double total = s.total_gas();
  for (int i = 0; i < 200; ++i) {
    const auto n = step_plant(s, 0.001, PlantParams{});
    EXPECT_GT(n.chamber_pressures[3], s.chamber_pressures[3] - 1e-15);
    EXPECT_LE(n.tank_pressure, s.tank_pressure);
    EXPECT_LE(n.chamber_pressures[3], n.tank_pressure + 1e-12);
    EXPECT_NEAR(n.total_gas(), total, 1e-12 * total);
    s = n;
  }
  EXPECT_GT(s.chamber_pressures[3], 50.0);
}

TEST(StepPlant, RejectsBadStep) {
  EXPECT_THROW(step_plant(rest(10), 0.0, PlantParams{}), Error);
  EXPECT_THROW(step_plant(rest(10), NAN, PlantParams{}), Error);
  PlantParams bad;
  bad.chamber_volume = -1;
  EXPECT_THROW(step_plant(rest(10), 0.001, bad), Error);
}

TEST(StepPlant, InflateConvergesToExactSolution) {
  const PlantParams pl;
  auto s = rest(90.0);
  s.valves[0] = Valve::kInflate;
  const double dt = 1e-6;
  for (int i = 0; i < 20000; ++i) s = step_plant(s, dt, pl);
  const double exact = inflate_exact(pl, 90.0, 0.0, 20000 * dt);
  EXPECT_NEAR(s.chamber_pressures[0], exact, 1e-3 * exact);
}

TEST(StepPlant, ExhaustConvergesToExponentialDecay) {
  const PlantParams pl;
  auto s = rest(0.0, 50.0);
  s.valves[5] = Valve::kExhaust;
  const double dt = 1e-6;
  for (int i = 0; i < 30000; ++i) s = step_plant(s, dt, pl);
  const double exact = 50.0 * std::exp(-pl.outflow_coeff / pl.chamber_volume * 30000 * dt);
  EXPECT_NEAR(s.chamber_pressures[5], exact, 1e-3 * exact);
}

TEST(StepPlant, PumpFillsTankUpToMax) {
  const PlantParams pl;
  auto s = rest(0.0);
  s.pump_on = true;
  for (int i = 0; i < 10000; ++i) s = step_plant(s, 0.001, pl);
  EXPECT_DOUBLE_EQ(s.tank_pressure, pl.tank_pressure_max);
}

TEST(StepPlant, PressuresStayInBoundsUnderRandomValves) {
  const PlantParams pl;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> pick(0, 3);
  auto s = rest(pl.tank_pressure_max);
  s.pump_on = true;
  for (int i = 0; i < 20000; ++i) {
    for (auto& v : s.valves) v = static_cast<Valve>(pick(rng));
    const auto n = step_plant(s, 0.001, pl);
    for (std::size_t c = 0; c < kChamberCount; ++c) {
      EXPECT_GE(n.chamber_pressures[c], 0.0);
      EXPECT_LE(n.chamber_pressures[c], pl.tank_pressure_max + 1e-9);
      if (s.valves[c] == Valve::kLocked) {
        EXPECT_EQ(n.chamber_gas[c], s.chamber_gas[c]);
      }
      if (s.valves[c] == Valve::kInflate && s.chamber_pressures[c] <= s.tank_pressure) {
        // Never filled past the tank it drew from.
        EXPECT_LE(n.chamber_pressures[c], s.tank_pressure + 1e-9);
      }
    }
    s = n;
  }
}

TEST(StepPlant, ConservesGasWithPumpOffAndExhaustsClosed) {
  const PlantParams pl;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> pick(0, 2);
  auto s = rest(pl.tank_pressure_max, 5.0);
  const double total = s.total_gas();
  for (int i = 0; i < 100000; ++i) {
    for (auto& v : s.valves) {
      const int k = pick(rng);
      v = k == 0 ? Valve::kClosed : k == 1 ? Valve::kInflate : Valve::kLocked;
    }
    s = step_plant(s, 0.001, pl);
  }
  EXPECT_LT(std::abs(s.total_gas() - total) / total, 1e-12);
}

TEST(Modes, PowerSetsAllReferences) {
  const auto c = apply_mode(PowerMode{50.0}, pressure::PressureMaps{});
  for (const auto& r : c.references) EXPECT_EQ(r, 50.0);
  EXPECT_FALSE(c.lock_all);
}

TEST(Modes, AbAdZeroAnglesSitAtBias) {
  const auto c = apply_mode(AbAdMode::both({0, 0, 0}), pressure::PressureMaps{}, 30.0);
  const std::array<double, 8> expected{0, 30, 0, 30, 0, 30, 0, 30};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(c.references[i], expected[i]);
}

TEST(Modes, AbAdSaturationPropagates) {
  EXPECT_THROW(apply_mode(AbAdMode::both({3.0, 0, 0}), pressure::PressureMaps{}), Saturation);
}

TEST(Modes, HoldingLocksEveryChamberAndKeepsReferences) {
  PressureLoop loop(PlantParams{}, ControllerConfig{}, rest(100.0));
  loop.apply(apply_mode(PowerMode{35.0}, pressure::PressureMaps{}));
  for (int i = 0; i < 300; ++i) loop.tick();
  loop.apply(apply_mode(HoldingMode{}, pressure::PressureMaps{}));
  EXPECT_TRUE(loop.locked());
  for (const auto& r : loop.references()) EXPECT_EQ(r, 35.0);
  const auto gas = loop.state().chamber_gas;
  for (int i = 0; i < 5000; ++i) loop.tick();
  for (auto v : loop.state().valves) EXPECT_EQ(v, Valve::kLocked);
  EXPECT_EQ(loop.state().chamber_gas, gas);
}

TEST(Modes, Names) {
  EXPECT_EQ(mode_name(PowerMode{}), "power");
  EXPECT_EQ(mode_name(AbAdMode{}), "abad");
  EXPECT_EQ(mode_name(HoldingMode{}), "holding");
}

TEST(ClosedLoop, StepResponseStaysInDeadbandPlusOneStep) {
  const PlantParams pl;
  const ControllerConfig cfg;
  PressureLoop loop(pl, cfg, rest(pl.tank_pressure_max));
  loop.apply(apply_mode(PowerMode{40.0}, pressure::PressureMaps{}));
  // Largest single-period rise from the lower band edge, fine-step oracle.
  const double overshoot =
      inflate_fine(pl, pl.tank_pressure_max, 40.0 - cfg.deadband, cfg.control_period) -
      (40.0 - cfg.deadband);
  ASSERT_GT(overshoot, 0.0);
  for (int i = 0; i < 300; ++i) loop.tick();
  for (int i = 0; i < 3000; ++i) {
    loop.tick();
    for (double p : loop.state().chamber_pressures) {
      EXPECT_LE(std::abs(p - 40.0), cfg.deadband + overshoot);
    }
  }
}

TEST(Tracking, ScheduleIntervals) {
  const auto iv = ScheduleSpec{}.intervals();
  ASSERT_EQ(iv.size(), 15u);
  EXPECT_DOUBLE_EQ(iv.front(), 1.3);
  EXPECT_NEAR(iv[13], 0.26, 1e-12);
  EXPECT_NEAR(iv.back(), 0.18, 1e-12);
}

TEST(Tracking, ConstantReferenceAtInitialPressureAlwaysReached) {
  const PlantParams pl;
  const std::array<std::size_t, 8> all{0, 1, 2, 3, 4, 5, 6, 7};
  const auto sig = constant_reference(all, 20.0, 0.1, 10);
  const auto r = run_tracking_test(sig, signal_duration(sig), ControllerConfig{}, pl, rest(80, 20));
  EXPECT_EQ(r.reached_cycle_count(), 10u);
}

TEST(Tracking, ReferenceAboveTankMaxNeverReached) {
  const PlantParams pl;
  const std::array<std::size_t, 1> one{2};
  const auto sig = constant_reference(one, pl.tank_pressure_max + 20.0, 0.5, 4);
  const auto r = run_tracking_test(sig, signal_duration(sig), ControllerConfig{}, pl,
                                   rest(pl.tank_pressure_max));
  EXPECT_EQ(r.reached_cycle_count(), 0u);
  for (const auto& c : r.cycles) {
    EXPECT_FALSE(c.all_reached);
    EXPECT_FALSE(c.reached[0].has_value());
    EXPECT_EQ(c.reached[2], false);
  }
}

TEST(Tracking, SweepScheduleReachesEveryCycleDownTo200ms) {
  const PlantParams pl;
  for (auto g : {TrackingGroup::kOpenClose, TrackingGroup::kSwingSame,
                 TrackingGroup::kSwingOpposite}) {
    const auto sig = sweep_schedule(g, ScheduleSpec{});
    const auto r = run_tracking_test(sig, signal_duration(sig), ControllerConfig{}, pl,
                                     rest(pl.tank_pressure_max));
    ASSERT_EQ(r.cycles.size(), sig.size());
    for (const auto& c : r.cycles) {
      if (c.interval >= 0.2 - 1e-12) {
        EXPECT_TRUE(c.all_reached) << group_name(g) << " cycle " << c.index;
      }
    }
  }
}

TEST(Tracking, GroupsDriveTheDocumentedChambers) {
  const ScheduleSpec spec;
  const auto g1 = sweep_schedule(TrackingGroup::kOpenClose, spec);
  EXPECT_EQ(g1[0].targets[2], spec.high_kpa);
  EXPECT_EQ(g1[0].targets[6], spec.high_kpa);
  EXPECT_FALSE(g1[0].targets[1].has_value());
  const auto g2 = sweep_schedule(TrackingGroup::kSwingSame, spec);
  EXPECT_EQ(g2[0].targets[1], g2[0].targets[5]);
  EXPECT_EQ(g2[0].targets[3], g2[0].targets[7]);
  const auto g3 = sweep_schedule(TrackingGroup::kSwingOpposite, spec);
  EXPECT_EQ(g3[0].targets[1], g3[0].targets[7]);
  EXPECT_EQ(g3[0].targets[3], g3[0].targets[5]);
  EXPECT_NE(g3[0].targets[1], g3[0].targets[5]);
  // Alternating high/low between consecutive cycles.
  EXPECT_EQ(g1[1].targets[2], spec.low_kpa);
}

TEST(Tracking, WiderDeadbandNeverReachesFewerCycles) {
  PlantParams slow;
  slow.inflow_coeff = 40.0;
  slow.outflow_coeff = 30.0;
  const auto sig = sweep_schedule(TrackingGroup::kSwingSame, ScheduleSpec{});
  std::size_t prev = 0;
  for (double db : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const auto r = run_tracking_test(sig, signal_duration(sig), ControllerConfig{db, 0.001},
                                     slow, rest(slow.tank_pressure_max));
    EXPECT_GE(r.reached_channel_count(), prev) << "deadband " << db;
    prev = r.reached_channel_count();
  }
}

TEST(Tracking, TraceLengthMatchesDuration) {
  const auto sig = sweep_schedule(TrackingGroup::kOpenClose, ScheduleSpec{});
  const auto r = run_tracking_test(sig, 1.0, ControllerConfig{}, PlantParams{}, rest(100));
  EXPECT_EQ(r.trace.size(), 1000u);
  EXPECT_THROW(run_tracking_test(sig, 0.0, ControllerConfig{}, PlantParams{}, rest(100)), Error);
}

}  // namespace
}  // namespace bhg::pneumatics
