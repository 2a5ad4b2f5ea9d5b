import { Component } from '@angular/core';

@Component({
  selector: 'app-order-dashboard',
  template: `<app-order-load-panel></app-order-load-panel><app-order-log-panel></app-order-log-panel><app-order-chart-panel></app-order-chart-panel>`
})
export class OrderDashboardComponent {}
