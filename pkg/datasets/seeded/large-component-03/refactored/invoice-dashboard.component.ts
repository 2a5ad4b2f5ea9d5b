import { Component } from '@angular/core';

@Component({
  selector: 'app-invoice-dashboard',
  template: `<app-invoice-load-panel></app-invoice-load-panel><app-invoice-log-panel></app-invoice-log-panel><app-invoice-chart-panel></app-invoice-chart-panel>`
})
export class InvoiceDashboardComponent {}
