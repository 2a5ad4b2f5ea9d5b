import { Component } from '@angular/core';

@Component({
  selector: 'app-product-dashboard',
  template: `<app-product-load-panel></app-product-load-panel><app-product-log-panel></app-product-log-panel><app-product-chart-panel></app-product-chart-panel>`
})
export class ProductDashboardComponent {}
