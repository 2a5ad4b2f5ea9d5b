import { Component } from '@angular/core';

@Component({
  selector: 'app-booking-dashboard',
  template: `<app-booking-load-panel></app-booking-load-panel><app-booking-log-panel></app-booking-log-panel><app-booking-chart-panel></app-booking-chart-panel>`
})
export class BookingDashboardComponent {}
