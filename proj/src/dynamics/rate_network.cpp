#include "molsim/dynamics/rate_network.hpp"

#include <algorithm>
#include <cmath>

#include "molsim/foundation/errors.hpp"

namespace molsim::dynamics {

using levels::LevelKet;


std::size_t RateNetwork::add_state(const LevelKet& label, bool emissive) {
  label.validate();
  if (contains(label)) throw InvalidArgument("duplicate state " + levels::to_string(label));
  labels_.push_back(label);
  emissive_.push_back(emissive);
  return labels_.size() - 1;
}

bool RateNetwork::contains(const LevelKet& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t RateNetwork::index_of(const LevelKet& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("unknown state " + levels::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

void RateNetwork::add_rate(const LevelKet& from, const LevelKet& to, double rate) {
  if (!(rate >= 0.0)) throw InvalidArgument("rates must be >= 0");
  const std::size_t i = index_of(from), j = index_of(to);
  if (i == j) throw InvalidArgument("self-loop on " + levels::to_string(from));
  rates_[{i, j}] += rate;
}

double RateNetwork::rate(std::size_t from, std::size_t to) const {
  const auto it = rates_.find({from, to});
  return it == rates_.end() ? 0.0 : it->second;
}

Eigen::MatrixXd RateNetwork::generator() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [edge, k] : rates_) {
    const auto i = static_cast<Eigen::Index>(edge.first), j = static_cast<Eigen::Index>(edge.second);
    q(j, i) += k;
    q(i, i) -= k;
  }
  return q;
}

Eigen::VectorXd steady_populations(const RateNetwork& network) {
  const auto n = static_cast<Eigen::Index>(network.size());
  if (n == 0) throw SingularNetwork("network has no states");
  const Eigen::MatrixXd q = network.generator();
  const double scale = std::max(q.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::MatrixXd a(n + 1, n);
  a.topRows(n) = q / scale;
  a.row(n).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  b(n) = 1.0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < n) throw SingularNetwork("stationary populations are not unique");
  Eigen::VectorXd p = qr.solve(b);
  if ((a * p - b).cwiseAbs().maxCoeff() > 1e-9) {
    throw SingularNetwork("no normalized stationary populations exist");
  }
  return p;
}

double fluorescence(const RateNetwork& network, const Eigen::VectorXd& p) {
  if (static_cast<std::size_t>(p.size()) != network.size()) {
    throw InvalidArgument("population vector does not match the network");
  }
  double f = 0.0;
  for (const auto& [edge, k] : network.rates()) {
    if (network.emissive()[edge.first] && network.labels()[edge.second].manifold.is_ground()) {
      f += p(static_cast<Eigen::Index>(edge.first)) * k;
    }
  }
  return f;
}

double odmr_contrast(const RateNetwork& network, const LevelKet& a, const LevelKet& b,
                     double mixing_rate) {
  if (!(mixing_rate >= 0.0)) throw InvalidArgument("mixing rate must be >= 0");
  for (const auto& need :
       {levels::make_ket(levels::S0), levels::make_ket(levels::S1),
        levels::make_ket(levels::T1, levels::TripletAxis::X),
        levels::make_ket(levels::T1, levels::TripletAxis::Y),
        levels::make_ket(levels::T1, levels::TripletAxis::Z)}) {
    if (!network.contains(need)) {
      throw PreconditionViolated("network lacks " + levels::to_string(need));
    }
  }
  if (!a.manifold.is_triplet() || !b.manifold.is_triplet() || a == b) {
    throw InvalidArgument("microwave pair must be two distinct T1 sublevels");
  }
  const double f_off = fluorescence(network, steady_populations(network));
  if (!(f_off > 0.0)) throw SingularNetwork("network has no steady-state fluorescence");
  if (mixing_rate == 0.0) return 0.0;
  RateNetwork on = network;
  on.add_rate(a, b, mixing_rate);
  on.add_rate(b, a, mixing_rate);
  const double f_on = fluorescence(on, steady_populations(on));
  return (f_on - f_off) / f_off;
}

OpenSystem to_open_system(const RateNetwork& network) {
  const auto n = static_cast<Eigen::Index>(network.size());
  OpenSystem s;
  s.hamiltonian = Matrix::Zero(n, n);
  for (const auto& [edge, k] : network.rates()) {
    Matrix op = Matrix::Zero(n, n);
    op(static_cast<Eigen::Index>(edge.second), static_cast<Eigen::Index>(edge.first)) = 1.0;
    s.channels.push_back({op, k});
  }
  return s;
}

void TripletPhotophysics::validate() const {
  if (!(pump_rate > 0.0 && radiative_rate > 0.0 && isc_rate >= 0.0)) {
    throw InvalidArgument("pump and radiative rates must be > 0, ISC rate >= 0");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!(isc_branching[k] >= 0.0)) throw InvalidArgument("ISC branching must be >= 0");
    if (!(triplet_decay[k] > 0.0)) throw InvalidArgument("triplet decay rates must be > 0");
    sum += isc_branching[k];
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw InvalidArgument("ISC branching must sum to 1");
}

RateNetwork make_triplet_network(const TripletPhotophysics& p) {
  p.validate();
  RateNetwork net;
  const LevelKet s0 = levels::make_ket(levels::S0);
  const LevelKet s1 = levels::make_ket(levels::S1);
  net.add_state(s0);
  net.add_state(s1, true);
  net.add_rate(s0, s1, p.pump_rate);
  net.add_rate(s1, s0, p.radiative_rate);
  const levels::TripletAxis axes[] = {levels::TripletAxis::X, levels::TripletAxis::Y,
                                      levels::TripletAxis::Z};
  for (std::size_t k = 0; k < 3; ++k) {
    const LevelKet t = levels::make_ket(levels::T1, axes[k]);
    net.add_state(t);
    net.add_rate(s1, t, p.isc_rate * p.isc_branching[k]);
    net.add_rate(t, s0, p.triplet_decay[k]);
  }
  return net;
}

}  // namespace molsim::dynamics
